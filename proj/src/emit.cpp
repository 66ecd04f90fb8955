#include "tam/emit.hpp"

#include <sstream>

namespace tam {

bool CellSpec::operator==(const CellSpec& o) const {
  if (color != o.color) return false;
  for (int d = 0; d < kNumDirs3D; ++d)
    if (!(glues[d] == o.glues[d])) return false;
  return true;
}

bool CellSpec::operator<(const CellSpec& o) const {
  if (color != o.color) return color < o.color;
  for (int d = 0; d < kNumDirs3D; ++d) {
    if (glues[d].label != o.glues[d].label)
      return glues[d].label < o.glues[d].label;
    if (glues[d].strength != o.glues[d].strength)
      return glues[d].strength < o.glues[d].strength;
  }
  return false;
}

SystemBuilder::SystemBuilder(Dim dim, int temperature,
                             std::vector<std::string> palette)
    : dim_(dim), temperature_(temperature), palette_(std::move(palette)) {}

void SystemBuilder::put(const Loc& loc, const CellSpec& spec) {
  auto [it, inserted] = cells_.emplace(loc, spec);
  if (!inserted && !(it->second == spec)) {
    std::ostringstream msg;
    msg << "conflicting cell spec at (" << loc.x << "," << loc.y << ","
        << loc.z << ")";
    throw std::logic_error(msg.str());
  }
}

const CellSpec* SystemBuilder::cell(const Loc& loc) const {
  auto it = cells_.find(loc);
  return it == cells_.end() ? nullptr : &it->second;
}

void SystemBuilder::decorate(const Loc& loc, Dir d, const Glue& g) {
  auto it = cells_.find(loc);
  if (it == cells_.end())
    throw std::logic_error("decorate: cell not painted");
  Glue& slot = it->second.glue(d);
  if (slot.is_null()) {
    slot = g;
    return;
  }
  if (!(slot == g))
    throw std::logic_error("decorate: glue slot already taken (" + slot.label +
                           " vs " + g.label + ")");
}

void SystemBuilder::add_family_tile(const CellSpec& spec) {
  family_.push_back(spec);
}

TileAssemblySystem SystemBuilder::build(const std::string& name_prefix) const {
  if (cells_.empty()) throw std::logic_error("build: no cells painted");
  if (!cells_.count(seed_)) throw std::logic_error("build: seed not painted");
  TileAssemblySystem sys;
  sys.dim = dim_;
  sys.temperature = temperature_;
  sys.tileset.palette = palette_;
  std::map<CellSpec, int> dedupe;
  auto intern = [&](const CellSpec& spec) {
    auto it = dedupe.find(spec);
    if (it != dedupe.end()) return it->second;
    int idx = static_cast<int>(sys.tileset.tiles.size());
    dedupe.emplace(spec, idx);
    TileType t;
    t.name = name_prefix + std::to_string(idx);
    t.color = spec.color;
    for (int d = 0; d < kNumDirs3D; ++d) t.glues[d] = spec.glues[d];
    sys.tileset.tiles.push_back(std::move(t));
    return idx;
  };
  for (const CellSpec& spec : family_) intern(spec);
  for (const auto& [loc, spec] : cells_) intern(spec);
  // Tiles sharing a full glue signature but not a color would make the
  // system inherently ambiguous; refuse to emit such a set.
  std::map<std::array<std::pair<std::string, int>, kNumDirs3D>, ColorId> sig;
  for (const auto& t : sys.tileset.tiles) {
    std::array<std::pair<std::string, int>, kNumDirs3D> key;
    for (int d = 0; d < kNumDirs3D; ++d)
      key[d] = {t.glues[d].label, t.glues[d].strength};
    auto [it, inserted] = sig.emplace(key, t.color);
    if (!inserted && it->second != t.color)
      throw std::logic_error("build: same-glue tiles with different colors");
  }
  sys.seed.place(seed_, dedupe.at(cells_.at(seed_)));
  normalize_system(sys);
  return sys;
}

std::map<Loc, int> SystemBuilder::intended_placements(
    const TileAssemblySystem& sys) const {
  std::map<CellSpec, int> by_spec;
  for (std::size_t i = 0; i < sys.tileset.tiles.size(); ++i) {
    const TileType& t = sys.tileset.tiles[i];
    CellSpec spec;
    spec.color = t.color;
    for (int d = 0; d < kNumDirs3D; ++d) spec.glues[d] = t.glues[d];
    by_spec.emplace(spec, static_cast<int>(i));
  }
  std::map<Loc, int> out;
  for (const auto& [loc, spec] : cells_) out[loc] = by_spec.at(spec);
  return out;
}

Pattern SystemBuilder::target_pattern(int z_plane) const {
  int minx = 0, maxx = -1, miny = 0, maxy = -1;
  bool first = true;
  for (const auto& [loc, spec] : cells_) {
    if (loc.z != z_plane) continue;
    if (first) {
      minx = maxx = loc.x;
      miny = maxy = loc.y;
      first = false;
    } else {
      minx = std::min(minx, loc.x);
      maxx = std::max(maxx, loc.x);
      miny = std::min(miny, loc.y);
      maxy = std::max(maxy, loc.y);
    }
  }
  if (first) throw std::logic_error("target_pattern: no cells in plane");
  Pattern p = Pattern::filled(maxx - minx + 1, maxy - miny + 1, 0, palette_);
  for (int y = miny; y <= maxy; ++y)
    for (int x = minx; x <= maxx; ++x) {
      auto it = cells_.find(Loc{x, y, z_plane});
      if (it == cells_.end())
        throw std::logic_error("target_pattern: hole in painted region");
      p.at(x - minx, y - miny) = it->second.color;
    }
  return p;
}

}  // namespace tam
