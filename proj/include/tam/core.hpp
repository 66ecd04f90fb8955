#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tam {

// Lattice location. z is only used in barely-3D mode and is then 0 or 1.
struct Loc {
  int x = 0;
  int y = 0;
  int z = 0;

  friend bool operator==(const Loc& a, const Loc& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Loc& a, const Loc& b) { return !(a == b); }
  friend bool operator<(const Loc& a, const Loc& b) {
    if (a.z != b.z) return a.z < b.z;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  }
};

enum class Dir : int { N = 0, E = 1, S = 2, W = 3, U = 4, D = 5 };

constexpr int kNumDirs2D = 4;
constexpr int kNumDirs3D = 6;

Dir opposite(Dir d);
Loc neighbor(const Loc& l, Dir d);
const char* dir_name(Dir d);

// The null glue is the empty label with strength 0. Any glue with an empty
// label must have strength 0.
struct Glue {
  std::string label;
  int strength = 0;

  bool is_null() const { return label.empty(); }
  friend bool operator==(const Glue& a, const Glue& b) {
    return a.strength == b.strength && a.label == b.label;
  }
  friend bool operator!=(const Glue& a, const Glue& b) { return !(a == b); }
};

using ColorId = int;

struct TileType {
  std::string name;
  ColorId color = 0;
  Glue glues[kNumDirs3D];  // N,E,S,W always; U,D meaningful in barely-3D only

  const Glue& glue(Dir d) const { return glues[static_cast<int>(d)]; }
  Glue& glue(Dir d) { return glues[static_cast<int>(d)]; }
};

struct TileSet {
  std::vector<TileType> tiles;        // order is significant (attachment order)
  std::vector<std::string> palette;   // index 0 is conventionally "White"

  int find(const std::string& name) const;  // -1 if absent
};

enum class Dim { D2, Barely3D };

struct Assembly {
  std::map<Loc, int> placements;  // location -> tile index
  std::vector<Loc> insertion_order;
  // Cached bounds, valid when !empty().
  int min_x = 0, max_x = 0, min_y = 0, max_y = 0, min_z = 0, max_z = 0;

  bool empty() const { return placements.empty(); }
  std::size_t size() const { return placements.size(); }
  bool occupied(const Loc& l) const { return placements.count(l) != 0; }
  std::optional<int> tile_at(const Loc& l) const;
  void place(const Loc& l, int tile_index);
};

struct TileAssemblySystem {
  TileSet tileset;
  Assembly seed;
  int temperature = 1;
  Dim dim = Dim::D2;

  int dirs() const { return dim == Dim::Barely3D ? kNumDirs3D : kNumDirs2D; }
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

// Strength of the bond between two abutting glues: equal label and strength,
// positive strength. The null glue never binds.
int glue_binds(const Glue& a, const Glue& b);

// Total binding strength a tile of type `tile` would have at `loc`.
// Throws ValidationError if loc is occupied.
int attachment_strength(const TileAssemblySystem& sys, const Assembly& asm_,
                        const Loc& loc, const TileType& tile);

// Validates invariants and clamps glue strengths above the temperature.
// Throws ValidationError on bad input.
void normalize_system(TileAssemblySystem& sys);

// TAMSET v1 text codec. serialize(parse(t)) is byte-identical to the
// canonical form; parse(serialize(s)) == s.
std::string serialize_system(const TileAssemblySystem& sys);
TileAssemblySystem parse_system(const std::string& text);

}  // namespace tam
