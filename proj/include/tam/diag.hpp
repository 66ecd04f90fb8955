#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tam/bignum.hpp"
#include "tam/compilers.hpp"
#include "tam/patterns.hpp"
#include "tam/sf.hpp"

namespace tam {

// Enumeration parameters for the diagonalization sweep. Defaults reproduce
// the paper-scale constants; compute_bits refuses universes whose system
// count exceeds the hard cap.
struct Universe {
  int max_tile_types = 1;
  int num_colors = 8;
  int num_coop_sets = 168;
  // Steps per simulation; unset means the default (2 * numSystems)^2.
  std::optional<std::uint64_t> step_budget;
  // Cell size / probe window; unset means numSystems.
  std::optional<std::uint64_t> patt_size;
  enum Mode { DirectSF, PaperFlow } mode = DirectSF;
};

struct UniverseTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BitReason { Flip, EmptyFrontierEarly, NoBoundaryColor, TooSmall,
                       NoIndexTile };
const char* bit_reason_name(BitReason r);

struct BitSequence {
  std::vector<int> bits;
  std::vector<BitReason> reasons;

  std::string bit_string() const;
};

// Exact evaluation of the system-counting formula:
// sum over t = 1..maxTileTypes of (coops * colors * (t+1)^4)^t * t.
BigUint count_sf_systems(const Universe& u);

// Streams systems in the canonical nested order: tile-set size ascending,
// odometer order over tile sets (glue slots, then color, then coop set,
// tiles[0] least significant), seed index innermost. Returns the number of
// systems visited; the callback may stop the sweep by returning false.
std::uint64_t sf_enumerate(const Universe& u,
                           const std::function<bool(const SFSystem&)>& fn);

struct SimOutcome {
  int bit = 0;
  BitReason reason = BitReason::EmptyFrontierEarly;
};

// Bounded simulation plus the index probe (the width/height inspection with
// the four flip-rule branches).
SimOutcome simulate_sf(const SFSystem& sys, std::uint64_t num_steps,
                       std::uint64_t patt_size, std::uint64_t index,
                       const Universe& u);

// The probe alone, for hand-built assemblies: scans the bounding box from
// the low coordinate (first tile in insertion order per coordinate), finds
// the first boundary-colored tile, probes `index` further on and returns the
// flipped bit class of the color found there.
SimOutcome get_pattern_value(const std::vector<SFTile>& tiles,
                             const Assembly& a, std::uint64_t patt_size,
                             std::uint64_t index);

constexpr std::uint64_t kDefaultUniverseCap = 200000;

// Runs the full sweep. Throws UniverseTooLarge when the enumerated count
// exceeds the cap and Unsupported in PaperFlow mode (the strength-free to
// aTAM conversion is external; direct simulation covers its behaviors).
BitSequence compute_bits(const Universe& u,
                         std::uint64_t hard_cap = kDefaultUniverseCap);

// The m x m grid pattern of c x c cells encoding the bit sequence: the i-th
// row (from the north) and i-th column of every cell carry bit i, boundary
// cells colored by (rowBit, colBit) as Red/Green/Black/White and interior
// ones as Fuchsia/Blue/Yellow/Aqua.
Pattern render_pn(const BitSequence& b, int c, int m);

struct BadLength : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Barely-3D system whose z=1 plane weakly self-assembles
// render_pn(b, |b|, m): a hard-coded seed row encoding b, a constant group
// copying it periodically across the full top row of z=0, a strength-2 +z
// glue on the easternmost top cell, a constant first-row group in z=1 and
// the diagonal grid-growth module.
CompiledSystem compile_pn_lift(const std::vector<int>& bits, int m);

}  // namespace tam
