#include "tam/sim.hpp"

#include <algorithm>
#include <sstream>

namespace tam {

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return next() % n; }

EngineView::EngineView(const TileAssemblySystem& s)
    : sys(&s), tau(s.temperature), nd(s.dirs()), candidates(nd) {
  std::map<std::pair<std::string, int>, int> intern;
  glue_strength.push_back(0);  // null glue
  auto intern_glue = [&](const Glue& g) {
    if (g.is_null()) return 0;
    auto key = std::make_pair(g.label, g.strength);
    auto it = intern.find(key);
    if (it != intern.end()) return it->second;
    int id = static_cast<int>(glue_strength.size());
    intern.emplace(key, id);
    glue_strength.push_back(g.strength);
    return id;
  };
  tile_glue.resize(s.tileset.tiles.size());
  for (std::size_t t = 0; t < s.tileset.tiles.size(); ++t) {
    for (int d = 0; d < kNumDirs3D; ++d)
      tile_glue[t][d] = intern_glue(s.tileset.tiles[t].glues[d]);
    for (int d = 0; d < nd; ++d) {
      int gid = tile_glue[t][d];
      if (gid > 0) candidates[d][gid].push_back(static_cast<int>(t));
    }
  }
}

int EngineView::strength_at(const Assembly& a, const Loc& loc,
                            int tile) const {
  int total = 0;
  for (int d = 0; d < nd; ++d) {
    auto nb = a.tile_at(neighbor(loc, static_cast<Dir>(d)));
    if (!nb) continue;
    int mine = tile_glue[tile][d];
    int theirs = tile_glue[*nb][static_cast<int>(opposite(static_cast<Dir>(d)))];
    if (mine != 0 && mine == theirs) total += glue_strength[mine];
  }
  return total;
}

void EngineView::legal_tiles(const Assembly& a, const Loc& loc,
                             std::vector<int>& out) const {
  out.clear();
  for (int d = 0; d < nd; ++d) {
    auto nb = a.tile_at(neighbor(loc, static_cast<Dir>(d)));
    if (!nb) continue;
    int theirs = tile_glue[*nb][static_cast<int>(opposite(static_cast<Dir>(d)))];
    if (theirs == 0) continue;
    auto it = candidates[d].find(theirs);
    if (it == candidates[d].end()) continue;
    for (int t : it->second) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](int t) { return strength_at(a, loc, t) < tau; }),
            out.end());
}

bool EngineView::any_legal(const Assembly& a, const Loc& loc) const {
  for (int d = 0; d < nd; ++d) {
    auto nb = a.tile_at(neighbor(loc, static_cast<Dir>(d)));
    if (!nb) continue;
    int theirs = tile_glue[*nb][static_cast<int>(opposite(static_cast<Dir>(d)))];
    if (theirs == 0) continue;
    auto it = candidates[d].find(theirs);
    if (it == candidates[d].end()) continue;
    for (int t : it->second)
      if (strength_at(a, loc, t) >= tau) return true;
  }
  return false;
}

SimState::SimState(const TileAssemblySystem& sys)
    : system(&sys), view(sys), assembly(sys.seed) {}

void update_frontier(SimState& state, const Loc& loc) {
  if (state.frontier_set.erase(loc)) {
    auto it = std::find(state.frontier.begin(), state.frontier.end(), loc);
    if (it != state.frontier.end()) state.frontier.erase(it);
  }
  // Probe order matches the engine contract: +x, -x, +y, -y, +z, -z.
  static const Dir probe[] = {Dir::E, Dir::W, Dir::N, Dir::S, Dir::U, Dir::D};
  int nd = state.view.nd;
  for (int k = 0; k < nd; ++k) {
    Loc nb = neighbor(loc, probe[k]);
    if (!state.view.location_ok(nb)) continue;
    if (state.assembly.occupied(nb)) continue;
    if (state.frontier_set.count(nb)) continue;
    if (state.view.any_legal(state.assembly, nb)) {
      state.frontier.push_back(nb);
      state.frontier_set.insert(nb);
    }
  }
}

SimState init_state(const TileAssemblySystem& sys) {
  SimState state(sys);
  for (const Loc& l : sys.seed.insertion_order) update_frontier(state, l);
  return state;
}

namespace {

std::optional<Placement> add_tile_paper(SimState& state) {
  std::vector<int> cand;
  while (!state.frontier.empty()) {
    Loc loc = state.frontier.front();
    state.view.legal_tiles(state.assembly, loc, cand);
    if (cand.empty()) {
      // Stale entry; drop and keep scanning.
      state.frontier.pop_front();
      state.frontier_set.erase(loc);
      continue;
    }
    int tile = cand.front();  // first in tile-set order
    state.frontier.pop_front();
    state.frontier_set.erase(loc);
    state.assembly.place(loc, tile);
    update_frontier(state, loc);
    ++state.steps;
    return Placement{loc, tile};
  }
  return std::nullopt;
}

std::optional<Placement> add_tile_random(SimState& state, SplitMix64& rng) {
  std::vector<std::pair<Loc, int>> pairs;
  std::vector<int> cand;
  std::vector<Loc> dead;
  for (const Loc& loc : state.frontier) {
    state.view.legal_tiles(state.assembly, loc, cand);
    if (cand.empty()) {
      dead.push_back(loc);
      continue;
    }
    for (int t : cand) pairs.emplace_back(loc, t);
  }
  for (const Loc& loc : dead) {
    state.frontier_set.erase(loc);
    auto it = std::find(state.frontier.begin(), state.frontier.end(), loc);
    if (it != state.frontier.end()) state.frontier.erase(it);
  }
  if (pairs.empty()) return std::nullopt;
  auto [loc, tile] = pairs[rng.below(pairs.size())];
  auto it = std::find(state.frontier.begin(), state.frontier.end(), loc);
  if (it != state.frontier.end()) state.frontier.erase(it);
  state.frontier_set.erase(loc);
  state.assembly.place(loc, tile);
  update_frontier(state, loc);
  ++state.steps;
  return Placement{loc, tile};
}

}  // namespace

std::optional<Placement> add_tile(SimState& state, AttachmentPolicy policy,
                                  SplitMix64* rng) {
  if (policy.kind == AttachmentPolicy::PaperOrder) return add_tile_paper(state);
  SplitMix64 local(policy.seed);
  return add_tile_random(state, rng ? *rng : local);
}

RunResult run(SimState& state, std::uint64_t max_steps,
              AttachmentPolicy policy,
              const std::function<void(const Placement&)>& on_place,
              std::uint64_t hard_cap) {
  if (max_steps > hard_cap)
    throw StepBudgetOverflow("max_steps " + std::to_string(max_steps) +
                             " exceeds hard cap " + std::to_string(hard_cap));
  SplitMix64 rng(policy.seed);
  std::uint64_t done = 0;
  while (done < max_steps) {
    auto placed = policy.kind == AttachmentPolicy::PaperOrder
                      ? add_tile_paper(state)
                      : add_tile_random(state, rng);
    if (!placed) return {true, done};
    ++done;
    if (on_place) on_place(*placed);
  }
  // Budget exhausted; terminal only if nothing else can attach.
  std::vector<int> cand;
  for (const Loc& loc : state.frontier) {
    state.view.legal_tiles(state.assembly, loc, cand);
    if (!cand.empty()) return {false, done};
  }
  return {true, done};
}

std::string trace_run(const TileAssemblySystem& sys, std::uint64_t max_steps,
                      AttachmentPolicy policy) {
  SimState state = init_state(sys);
  std::ostringstream out;
  std::uint64_t n = 0;
  bool b3 = sys.dim == Dim::Barely3D;
  run(state, max_steps, policy, [&](const Placement& p) {
    ++n;
    out << "STEP " << n << " " << p.loc.x << " " << p.loc.y;
    if (b3) out << " " << p.loc.z;
    out << " " << sys.tileset.tiles[p.tile_index].name << "\n";
  });
  return out.str();
}

std::variant<std::vector<std::map<Loc, int>>, Overflow> enumerate_terminal(
    const TileAssemblySystem& sys, std::size_t max_assemblies,
    std::size_t max_size) {
  EngineView view(sys);
  using Canon = std::map<Loc, int>;
  std::set<Canon> visited;
  std::vector<Canon> queue;
  std::vector<Canon> terminal;
  Canon start = sys.seed.placements;
  visited.insert(start);
  queue.push_back(start);
  std::vector<int> cand;
  while (!queue.empty()) {
    Canon cur = queue.back();
    queue.pop_back();
    if (cur.size() > max_size) return Overflow{"assembly exceeds max size"};
    Assembly a;
    for (const auto& [loc, t] : cur) a.place(loc, t);
    // Collect all legal attachments.
    std::set<Loc> open;
    for (const auto& [loc, t] : cur)
      for (int d = 0; d < view.nd; ++d) {
        Loc nb = neighbor(loc, static_cast<Dir>(d));
        if (!view.location_ok(nb) || a.occupied(nb)) continue;
        open.insert(nb);
      }
    bool any = false;
    for (const Loc& loc : open) {
      view.legal_tiles(a, loc, cand);
      for (int t : cand) {
        any = true;
        Canon next = cur;
        next[loc] = t;
        if (visited.insert(next).second) {
          if (visited.size() > max_assemblies)
            return Overflow{"visited set exceeds max assemblies"};
          queue.push_back(next);
        }
      }
    }
    if (!any) terminal.push_back(cur);
  }
  return terminal;
}

}  // namespace tam
