#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "tam/core.hpp"
#include "tam/sim.hpp"

namespace tam {

// Strength-free tile type: glue labels are small integers (0 = null), and
// attachment is governed by a monotone cooperation set over the four sides
// instead of strengths and a temperature.
struct SFTile {
  int labels[4] = {0, 0, 0, 0};  // N, E, S, W
  int color = 0;
  int coop = 0;  // index into coop_sets()

  int label(Dir d) const { return labels[static_cast<int>(d)]; }
};

struct SFSystem {
  std::vector<SFTile> tiles;
  int seed_index = 0;
};

// Match-vector bit positions. A vector v has bit dir_bit(d) set when the
// neighbor in direction d exists and carries the same non-null label on the
// abutting side.
inline int dir_bit(Dir d) { return 1 << static_cast<int>(d); }

// All monotone (upward-closed) boolean functions on subsets of {N,E,S,W},
// as 16-bit truth tables indexed by match vector, sorted ascending. There
// are exactly 168 of them; index 0 is constant-false, 167 constant-true.
const std::vector<std::uint16_t>& coop_sets();

// Match vector of `tile` at `loc` against the current assembly.
int sf_match_vector(const SFSystem& sys, const Assembly& a, const Loc& loc,
                    const SFTile& tile);

bool sf_attachable(const SFSystem& sys, const Assembly& a, const Loc& loc,
                   const SFTile& tile);

// Minimal simulation state for strength-free systems under the same
// deterministic frontier discipline as the main engine (FIFO discovery,
// probe order +x,-x,+y,-y, first fitting tile in set order).
struct SFSimState {
  const SFSystem* sys = nullptr;
  Assembly assembly;
  std::deque<Loc> frontier;
  std::set<Loc> frontier_set;

  explicit SFSimState(const SFSystem& s);
};

void sf_update_frontier(SFSimState& st, const Loc& loc);
SFSimState sf_init(const SFSystem& sys);  // seed placed at the origin
std::optional<Placement> sf_add_tile(SFSimState& st);

}  // namespace tam
