#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tam/core.hpp"
#include "tam/patterns.hpp"

namespace tam {

// One painted lattice cell: a color plus the six glue slots.
struct CellSpec {
  ColorId color = 0;
  Glue glues[kNumDirs3D];

  Glue& glue(Dir d) { return glues[static_cast<int>(d)]; }
  const Glue& glue(Dir d) const { return glues[static_cast<int>(d)]; }
  bool operator==(const CellSpec& o) const;
  bool operator<(const CellSpec& o) const;
};

// Collects painted cells and dedupes identical specs into tile types.
// Compilers paint every cell of the intended terminal assembly; the tile
// count comes out small because repeated machinery shares specs.
class SystemBuilder {
 public:
  SystemBuilder(Dim dim, int temperature,
                std::vector<std::string> palette = default_palette());

  // Paints a cell. Repainting with an identical spec is a no-op; a
  // conflicting spec is a compiler bug and throws.
  void put(const Loc& loc, const CellSpec& spec);
  bool painted(const Loc& loc) const { return cells_.count(loc) != 0; }
  const CellSpec* cell(const Loc& loc) const;
  // Adds glues to an already painted cell (slots must be free or equal).
  void decorate(const Loc& loc, Dir d, const Glue& g);

  void set_seed(const Loc& loc) { seed_ = loc; }
  const std::map<Loc, CellSpec>& cells() const { return cells_; }
  std::size_t cell_count() const { return cells_.size(); }

  // Registers a tile type up front (before painted-cell dedup). Used for
  // complete tile families whose members may not all occur in the painted
  // assembly.
  void add_family_tile(const CellSpec& spec);

  // Dedupes specs into tile types (named <prefix><k> in first-use order over
  // location order) and assembles the singly-seeded system.
  TileAssemblySystem build(const std::string& name_prefix = "t") const;

  // The intended terminal pattern of the painted region (must be a full
  // rectangle in the given plane).
  Pattern target_pattern(int z_plane = 0) const;

  // Tile index (in the built system) every painted cell should receive.
  std::map<Loc, int> intended_placements(const TileAssemblySystem& sys) const;

 private:
  Dim dim_;
  int temperature_;
  std::vector<std::string> palette_;
  std::map<Loc, CellSpec> cells_;
  std::vector<CellSpec> family_;
  Loc seed_{0, 0, 0};
};

// Helpers used by the compilers.
inline Glue g1(const std::string& label) { return Glue{label, 1}; }
inline Glue g2(const std::string& label) { return Glue{label, 2}; }

}  // namespace tam
