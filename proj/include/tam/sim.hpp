#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tam/core.hpp"

namespace tam {

struct AttachmentPolicy {
  enum Kind { PaperOrder, UniformRandom } kind = PaperOrder;
  std::uint64_t seed = 0;

  static AttachmentPolicy paper() { return {PaperOrder, 0}; }
  static AttachmentPolicy random(std::uint64_t seed) {
    return {UniformRandom, seed};
  }
};

// Deterministic 64-bit generator (splitmix64). Used instead of <random>
// distributions so runs are reproducible across platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // Uniform value in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
};

// Interned view of a tile set for fast attachment tests.
struct EngineView {
  const TileAssemblySystem* sys = nullptr;
  int tau = 1;
  int nd = 4;
  // Glue ids: 0 is the null glue; equal id means equal (label, strength).
  std::vector<int> glue_strength;                 // by glue id
  std::vector<std::array<int, kNumDirs3D>> tile_glue;  // tile -> dir -> glue id
  // candidates[d][gid] = tiles whose side d carries glue gid (gid > 0).
  std::vector<std::map<int, std::vector<int>>> candidates;

  explicit EngineView(const TileAssemblySystem& s);
  int strength_at(const Assembly& a, const Loc& loc, int tile) const;
  // Distinct tiles that might bind at loc (superset filtered by strength).
  void legal_tiles(const Assembly& a, const Loc& loc,
                   std::vector<int>& out) const;
  bool any_legal(const Assembly& a, const Loc& loc) const;
  bool location_ok(const Loc& l) const {
    if (sys->dim == Dim::Barely3D) return l.z == 0 || l.z == 1;
    return l.z == 0;
  }
};

struct SimState {
  const TileAssemblySystem* system = nullptr;
  EngineView view;
  Assembly assembly;
  std::deque<Loc> frontier;  // FIFO by discovery
  std::set<Loc> frontier_set;
  std::uint64_t steps = 0;

  explicit SimState(const TileAssemblySystem& sys);
};

struct Placement {
  Loc loc;
  int tile_index;
};

// Recomputes the frontier contribution of `loc` (a just-placed tile or a seed
// location): removes loc from the frontier and appends any unoccupied
// neighbor that now admits an attachment. Probe order +x,-x,+y,-y(,+z,-z).
void update_frontier(SimState& state, const Loc& loc);

SimState init_state(const TileAssemblySystem& sys);

// One attachment under the policy; nullopt means the assembly is terminal.
std::optional<Placement> add_tile(SimState& state, AttachmentPolicy policy,
                                  SplitMix64* rng = nullptr);

struct RunResult {
  bool terminal = false;
  std::uint64_t steps = 0;
};

struct StepBudgetOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultStepHardCap = 1ull << 32;

// Runs until terminal or max_steps; optional per-placement callback.
RunResult run(SimState& state, std::uint64_t max_steps,
              AttachmentPolicy policy,
              const std::function<void(const Placement&)>& on_place = nullptr,
              std::uint64_t hard_cap = kDefaultStepHardCap);

// `STEP <n> <x> <y> [<z>] <tilename>` lines for a fresh PaperOrder run.
std::string trace_run(const TileAssemblySystem& sys, std::uint64_t max_steps,
                      AttachmentPolicy policy = AttachmentPolicy::paper());

struct Overflow {
  std::string reason;
};

// Exhaustive exploration of producible assemblies for tiny systems.
// Assemblies are canonicalized by their placement map (absolute coords).
std::variant<std::vector<std::map<Loc, int>>, Overflow> enumerate_terminal(
    const TileAssemblySystem& sys, std::size_t max_assemblies,
    std::size_t max_size);

}  // namespace tam
