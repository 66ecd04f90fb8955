#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tam/emit.hpp"

namespace tam {

// Maps slab-local (u, r) coordinates into the plane. +r is the growth
// direction, +u the lateral one.
struct Frame {
  Loc origin;
  int ux = 1, uy = 0;
  int rx = 0, ry = 1;

  Loc at(int u, int r) const {
    return {origin.x + ux * u + rx * r, origin.y + uy * u + ry * r, origin.z};
  }
  Dir u_pos() const;
  Dir u_neg() const;
  Dir r_pos() const;
  Dir r_neg() const;

  static Frame north(Loc origin) { return {origin, 1, 0, 0, 1}; }
  static Frame south(Loc origin) { return {origin, 1, 0, 0, -1}; }
  static Frame east(Loc origin) { return {origin, 0, 1, 1, 0}; }
  static Frame west(Loc origin) { return {origin, 0, 1, -1, 0}; }
};

// One row of a zig-zag slab. Rows alternate traversal direction: odd rows
// run hi->lo (and may increment; the carry enters at the LSB next to the hi
// turn), even rows run lo->hi. Arm rows overwrite the bits with a per-column
// constant and work in either direction.
struct SlabRowPlan {
  enum Kind { Inc, Copy, Arm } kind = Copy;
  int arm_variant = 0;
  std::string note;  // bounded token; folded into this row's glue labels
};

struct SlabConfig {
  std::string ns;
  int w_bits = 1;
  std::vector<int> u0;                       // LSB first
  std::vector<std::vector<int>> arm_values;  // variant -> bits, LSB first
  std::vector<SlabRowPlan> rows;             // rows 1..R
  bool external_base = false;

  // Hooks. To keep the deduped tile set small these must depend only on
  // bounded row/column classes (the row's plan and note, static column
  // info), never on raw indices.
  std::function<ColorId(int r, int u)> color;            // default White
  std::function<std::string(int u)> col_extra_tag;       // static column tag
  std::function<Glue(int r)> lo_face;                    // outward -u glue
  std::function<Glue(int r)> hi_face;                    // outward +u glue
  std::function<Glue(int u)> top_face;                   // +r on final row
  std::function<void(int u, CellSpec&)> base_decor;      // base-row extras
};

struct SlabResult {
  int width = 0;  // columns including the two turn columns
  int rows = 0;
  std::vector<Glue> base_up;  // +r glues the base row exposes
};

// Paints the slab into the builder. Throws std::logic_error when the plan is
// unrealizable (an increment on an even row, inconsistent launch decisions,
// value overflow).
SlabResult emit_slab(SystemBuilder& b, const Frame& f, const SlabConfig& cfg);

// Builds the row plan for a one-shot count of `rows` rows: increments on
// odd rows until the value tops out, copies afterwards. Returns the plan and
// the initial value; w_bits is chosen to fit.
struct OneShotPlan {
  int w_bits = 1;
  std::vector<int> u0;
  std::vector<SlabRowPlan> rows;
};
OneShotPlan one_shot_plan(int rows);

// Segmented plan: arm rows at the given positions (strictly increasing,
// ending exactly at `rows`), counting between them so the launch decisions
// stay flag-driven. Arm k uses variant k. When `w_bits` is too small for a
// segment, extra "chain" arms are inserted; `arm_origin[v]` reports which
// requested arm (index into arm_rows) variant v realizes, or -1 for chains.
struct SegmentedPlan {
  int w_bits = 1;
  std::vector<int> u0;
  std::vector<std::vector<int>> arm_values;
  std::vector<SlabRowPlan> rows;
  std::vector<int> arm_origin;
};
SegmentedPlan segmented_plan(int rows, const std::vector<int>& arm_rows,
                             int w_bits = 0);

// Hard-coded rectangular ring walked from an anchor cell, chained with
// strength-2 glues, optionally with a cooperatively filled interior.
struct RingConfig {
  std::string ns;
  int x0 = 0, y0 = 0, w = 2, h = 2;
  Loc anchor;  // perimeter cell where the chain starts
  std::function<ColorId(int x, int y)> color;            // default White
  std::function<void(int x, int y, CellSpec&)> decor;    // outward glues
  bool fill_interior = true;
};
void emit_ring(SystemBuilder& b, const RingConfig& cfg);

// Cooperative rectangle fill: one shared tile per region. Cells carry
// `label_sn` on both N and S and `label_we` on both W and E; the region
// seeds wherever two perpendicular supports with matching labels exist.
void emit_rect_fill(SystemBuilder& b, int x0, int y0, int w, int h,
                    const std::string& label_sn, const std::string& label_we,
                    ColorId color = kWhite);

// Public counter gadget. Grown from a hard-coded initial row encoding
// `start`, it covers a (width+2) x (end-start+1) rectangle counting one per
// row toward `orientation`. Rows whose count is in black_rows are Black.
// Both lateral faces expose per-row `<ns>.tick` glues (`<ns>.ticktop` on the
// final row) and the final row exposes `<ns>.done.<u>` glues outward.
struct CounterSpec {
  int width = 1;
  long long start = 0;
  long long end = 0;
  enum class Orient { North, South, East, West } orientation = Orient::North;
  std::string ns;
  std::set<long long> black_rows;
};

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CounterGroup {
  int width = 0;   // total lateral width (bit width + 2 turns)
  int length = 0;  // rows including the initial row
  Loc base_origin;
};

CounterGroup make_counter(SystemBuilder& b, const CounterSpec& spec,
                          const Loc& base_origin);

}  // namespace tam
