#pragma once

#include <functional>
#include <string>

#include "tam/emit.hpp"

namespace tam {

// Skeleton-and-ribs painter for the interior rows of a rectangle: hard-coded
// columns every 2*floor(log2 height)+1 positions with shared rib tile
// families keyed by pattern bit strings. Paints rows [y0+1, y0+rows] of the
// region [x0, x0+width); the caller owns the base row at y0 and must add the
// returned column-anchor glues to its cells' north slots.
struct SkeletonSpec {
  std::string ns;
  int x0 = 0, y0 = 0;
  int width = 1;   // columns covered
  int rows = 0;    // interior rows above the base row
  int lam = 1;     // rib length (floor(log2 n) in the square construction)
  int strength = 1;  // glue strength (1 for tau=1, 2 for tau=2 systems)
  std::function<ColorId(int x, int y)> color;  // world coordinates
  bool emit_families = true;  // register the complete rib families
};

struct SkeletonOut {
  // North glue for base-row cell x (empty label = none).
  std::map<int, Glue> base_anchors;
  long long family_per_dir = 0;
};

SkeletonOut emit_skeleton(SystemBuilder& b, const SkeletonSpec& spec);

}  // namespace tam
