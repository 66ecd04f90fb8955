#include "tam/sf.hpp"

#include <algorithm>

namespace tam {

const std::vector<std::uint16_t>& coop_sets() {
  static const std::vector<std::uint16_t> table = [] {
    std::vector<std::uint16_t> out;
    for (int t = 0; t < (1 << 16); ++t) {
      bool monotone = true;
      for (int v = 0; v < 16 && monotone; ++v) {
        if (!((t >> v) & 1)) continue;
        for (int b = 0; b < 4; ++b) {
          int w = v | (1 << b);
          if (!((t >> w) & 1)) {
            monotone = false;
            break;
          }
        }
      }
      if (monotone) out.push_back(static_cast<std::uint16_t>(t));
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return table;
}

int sf_match_vector(const SFSystem& sys, const Assembly& a, const Loc& loc,
                    const SFTile& tile) {
  int v = 0;
  for (int d = 0; d < kNumDirs2D; ++d) {
    Dir dir = static_cast<Dir>(d);
    auto nb = a.tile_at(neighbor(loc, dir));
    if (!nb) continue;
    int mine = tile.label(dir);
    int theirs = sys.tiles[*nb].label(opposite(dir));
    if (mine != 0 && mine == theirs) v |= dir_bit(dir);
  }
  return v;
}

bool sf_attachable(const SFSystem& sys, const Assembly& a, const Loc& loc,
                   const SFTile& tile) {
  int v = sf_match_vector(sys, a, loc, tile);
  return (coop_sets()[tile.coop] >> v) & 1;
}

SFSimState::SFSimState(const SFSystem& s) : sys(&s) {}

void sf_update_frontier(SFSimState& st, const Loc& loc) {
  if (st.frontier_set.erase(loc)) {
    auto it = std::find(st.frontier.begin(), st.frontier.end(), loc);
    if (it != st.frontier.end()) st.frontier.erase(it);
  }
  static const Dir probe[] = {Dir::E, Dir::W, Dir::N, Dir::S};
  for (Dir d : probe) {
    Loc nb = neighbor(loc, d);
    if (st.assembly.occupied(nb)) continue;
    if (st.frontier_set.count(nb)) continue;
    bool any = false;
    for (const SFTile& t : st.sys->tiles)
      if (sf_attachable(*st.sys, st.assembly, nb, t)) {
        any = true;
        break;
      }
    if (any) {
      st.frontier.push_back(nb);
      st.frontier_set.insert(nb);
    }
  }
}

SFSimState sf_init(const SFSystem& sys) {
  SFSimState st(sys);
  st.assembly.place({0, 0, 0}, sys.seed_index);
  sf_update_frontier(st, {0, 0, 0});
  return st;
}

std::optional<Placement> sf_add_tile(SFSimState& st) {
  while (!st.frontier.empty()) {
    Loc loc = st.frontier.front();
    int chosen = -1;
    for (std::size_t t = 0; t < st.sys->tiles.size(); ++t)
      if (sf_attachable(*st.sys, st.assembly, loc, st.sys->tiles[t])) {
        chosen = static_cast<int>(t);
        break;
      }
    st.frontier.pop_front();
    st.frontier_set.erase(loc);
    if (chosen < 0) continue;  // stale entry
    st.assembly.place(loc, chosen);
    sf_update_frontier(st, loc);
    return Placement{loc, chosen};
  }
  return std::nullopt;
}

}  // namespace tam
