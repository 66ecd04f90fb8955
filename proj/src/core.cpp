#include "tam/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tam {

Dir opposite(Dir d) {
  switch (d) {
    case Dir::N: return Dir::S;
    case Dir::E: return Dir::W;
    case Dir::S: return Dir::N;
    case Dir::W: return Dir::E;
    case Dir::U: return Dir::D;
    case Dir::D: return Dir::U;
  }
  return Dir::N;
}

Loc neighbor(const Loc& l, Dir d) {
  switch (d) {
    case Dir::N: return {l.x, l.y + 1, l.z};
    case Dir::E: return {l.x + 1, l.y, l.z};
    case Dir::S: return {l.x, l.y - 1, l.z};
    case Dir::W: return {l.x - 1, l.y, l.z};
    case Dir::U: return {l.x, l.y, l.z + 1};
    case Dir::D: return {l.x, l.y, l.z - 1};
  }
  return l;
}

const char* dir_name(Dir d) {
  static const char* names[] = {"N", "E", "S", "W", "U", "D"};
  return names[static_cast<int>(d)];
}

int TileSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < tiles.size(); ++i)
    if (tiles[i].name == name) return static_cast<int>(i);
  return -1;
}

std::optional<int> Assembly::tile_at(const Loc& l) const {
  auto it = placements.find(l);
  if (it == placements.end()) return std::nullopt;
  return it->second;
}

void Assembly::place(const Loc& l, int tile_index) {
  if (placements.empty()) {
    min_x = max_x = l.x;
    min_y = max_y = l.y;
    min_z = max_z = l.z;
  } else {
    min_x = std::min(min_x, l.x);
    max_x = std::max(max_x, l.x);
    min_y = std::min(min_y, l.y);
    max_y = std::max(max_y, l.y);
    min_z = std::min(min_z, l.z);
    max_z = std::max(max_z, l.z);
  }
  placements[l] = tile_index;
  insertion_order.push_back(l);
}

int glue_binds(const Glue& a, const Glue& b) {
  if (a.strength <= 0 || b.strength <= 0) return 0;
  if (a.label != b.label || a.strength != b.strength) return 0;
  if (a.label.empty()) return 0;
  return a.strength;
}

int attachment_strength(const TileAssemblySystem& sys, const Assembly& asm_,
                        const Loc& loc, const TileType& tile) {
  if (asm_.occupied(loc))
    throw ValidationError("attachment_strength: location occupied");
  int total = 0;
  int nd = sys.dirs();
  for (int di = 0; di < nd; ++di) {
    Dir d = static_cast<Dir>(di);
    Loc nb = neighbor(loc, d);
    auto t = asm_.tile_at(nb);
    if (!t) continue;
    const TileType& other = sys.tileset.tiles[*t];
    total += glue_binds(tile.glue(d), other.glue(opposite(d)));
  }
  return total;
}

namespace {

void validate_label(const std::string& label) {
  for (char c : label)
    if (c == '|' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw ValidationError("glue label contains whitespace or '|': " + label);
}

}  // namespace

void normalize_system(TileAssemblySystem& sys) {
  if (sys.temperature < 1) throw ValidationError("temperature must be >= 1");
  if (sys.seed.empty()) throw ValidationError("seed must be non-empty");
  std::set<std::string> names;
  for (auto& t : sys.tileset.tiles) {
    if (t.name.empty()) throw ValidationError("tile with empty name");
    if (!names.insert(t.name).second)
      throw ValidationError("duplicate tile name: " + t.name);
    if (t.color < 0 || t.color >= static_cast<int>(sys.tileset.palette.size()))
      throw ValidationError("tile " + t.name + " color out of palette range");
    int nd = sys.dirs();
    for (int di = 0; di < kNumDirs3D; ++di) {
      Glue& g = t.glues[di];
      validate_label(g.label);
      if (g.label.empty() && g.strength != 0)
        throw ValidationError("null glue with nonzero strength on " + t.name);
      if (!g.label.empty() && g.strength <= 0)
        throw ValidationError("labeled glue with strength 0 on " + t.name);
      if (di >= nd && !g.is_null())
        throw ValidationError("tile " + t.name + " has U/D glue in 2D mode");
      if (g.strength > sys.temperature) g.strength = sys.temperature;
    }
  }
  for (const auto& [loc, idx] : sys.seed.placements) {
    if (idx < 0 || idx >= static_cast<int>(sys.tileset.tiles.size()))
      throw ValidationError("seed references missing tile index");
    if (sys.dim == Dim::D2 && loc.z != 0)
      throw ValidationError("seed placement with z != 0 in 2D mode");
    if (sys.dim == Dim::Barely3D && (loc.z < 0 || loc.z > 1))
      throw ValidationError("seed placement with z outside {0,1}");
  }
  // Seed domain must be connected under lattice adjacency.
  std::set<Loc> seen;
  std::vector<Loc> stack = {sys.seed.placements.begin()->first};
  seen.insert(stack[0]);
  int nd = sys.dirs();
  while (!stack.empty()) {
    Loc cur = stack.back();
    stack.pop_back();
    for (int d = 0; d < nd; ++d) {
      Loc nb = neighbor(cur, static_cast<Dir>(d));
      if (sys.seed.occupied(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
  }
  if (seen.size() != sys.seed.size())
    throw ValidationError("seed assembly is not connected");
}

namespace {

std::string glue_token(const Glue& g) {
  if (g.is_null()) return "-|0";
  return g.label + "|" + std::to_string(g.strength);
}

Glue parse_glue_token(const std::string& tok, int line) {
  auto bar = tok.rfind('|');
  if (bar == std::string::npos)
    throw ParseError(line, "bad glue token '" + tok + "'");
  std::string label = tok.substr(0, bar);
  std::string str = tok.substr(bar + 1);
  int strength = 0;
  try {
    strength = std::stoi(str);
  } catch (...) {
    throw ParseError(line, "bad glue strength '" + str + "'");
  }
  if (label == "-" && strength == 0) return Glue{};
  if (label == "-") throw ParseError(line, "null glue must have strength 0");
  return Glue{label, strength};
}

}  // namespace

std::string serialize_system(const TileAssemblySystem& sys) {
  std::ostringstream out;
  out << "TAMSET v1\n";
  out << "DIM " << (sys.dim == Dim::Barely3D ? 3 : 2) << "\n";
  out << "TEMP " << sys.temperature << "\n";
  out << "PALETTE";
  for (std::size_t i = 0; i < sys.tileset.palette.size(); ++i)
    out << " " << i << "=" << sys.tileset.palette[i];
  out << "\n";
  int nd = sys.dirs();
  for (const auto& t : sys.tileset.tiles) {
    out << "TILE " << t.name << " COLOR " << t.color;
    for (int di = 0; di < nd; ++di) {
      Dir d = static_cast<Dir>(di);
      out << " " << dir_name(d) << " " << glue_token(t.glue(d));
    }
    out << "\n";
  }
  for (const auto& loc : sys.seed.insertion_order) {
    int idx = sys.seed.placements.at(loc);
    out << "SEED " << sys.tileset.tiles[idx].name << " " << loc.x << " "
        << loc.y;
    if (sys.dim == Dim::Barely3D) out << " " << loc.z;
    out << "\n";
  }
  return out.str();
}

TileAssemblySystem parse_system(const std::string& text) {
  TileAssemblySystem sys;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_header = false, saw_dim = false, saw_temp = false;
  std::vector<std::pair<std::string, Loc>> seeds;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (!saw_header) {
      std::string ver;
      ls >> ver;
      if (kw != "TAMSET" || ver != "v1")
        throw ParseError(lineno, "expected 'TAMSET v1' header");
      saw_header = true;
      continue;
    }
    if (kw == "DIM") {
      int d;
      if (!(ls >> d) || (d != 2 && d != 3))
        throw ParseError(lineno, "DIM must be 2 or 3");
      sys.dim = d == 3 ? Dim::Barely3D : Dim::D2;
      saw_dim = true;
    } else if (kw == "TEMP") {
      if (!(ls >> sys.temperature) || sys.temperature < 1)
        throw ParseError(lineno, "TEMP must be a positive integer");
      saw_temp = true;
    } else if (kw == "PALETTE") {
      std::string entry;
      while (ls >> entry) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
          throw ParseError(lineno, "bad palette entry '" + entry + "'");
        std::size_t idx = std::stoul(entry.substr(0, eq));
        if (idx != sys.tileset.palette.size())
          throw ParseError(lineno, "palette indices must be consecutive");
        sys.tileset.palette.push_back(entry.substr(eq + 1));
      }
    } else if (kw == "TILE") {
      TileType t;
      std::string colorkw;
      if (!(ls >> t.name >> colorkw >> t.color) || colorkw != "COLOR")
        throw ParseError(lineno, "expected 'TILE <name> COLOR <idx> ...'");
      std::string dirtok, gluetok;
      while (ls >> dirtok >> gluetok) {
        int di = -1;
        for (int k = 0; k < kNumDirs3D; ++k)
          if (dirtok == dir_name(static_cast<Dir>(k))) di = k;
        if (di < 0) throw ParseError(lineno, "bad direction '" + dirtok + "'");
        t.glues[di] = parse_glue_token(gluetok, lineno);
      }
      sys.tileset.tiles.push_back(std::move(t));
    } else if (kw == "SEED") {
      std::string name;
      Loc loc;
      if (!(ls >> name >> loc.x >> loc.y))
        throw ParseError(lineno, "expected 'SEED <tile> <x> <y> [<z>]'");
      ls >> loc.z;  // optional; stays 0 when absent
      seeds.emplace_back(name, loc);
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!saw_header) throw ParseError(lineno, "missing TAMSET header");
  if (!saw_dim) throw ParseError(lineno, "missing DIM");
  if (!saw_temp) throw ParseError(lineno, "missing TEMP");
  if (seeds.empty()) throw ParseError(lineno, "missing SEED");
  for (auto& [name, loc] : seeds) {
    int idx = sys.tileset.find(name);
    if (idx < 0) throw ValidationError("seed tile '" + name + "' not defined");
    if (sys.seed.occupied(loc)) throw ValidationError("duplicate seed location");
    sys.seed.place(loc, idx);
  }
  normalize_system(sys);
  return sys;
}

}  // namespace tam
