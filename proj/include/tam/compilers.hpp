#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tam/core.hpp"
#include "tam/patterns.hpp"

namespace tam {

struct Budget {
  std::string symbolic;
  long long cap = 0;
  long long actual = 0;

  bool within() const { return actual <= cap; }
};

std::string budget_line(const Budget& b);  // "BUDGET <symbolic> <cap> <actual>"

struct CompiledSystem {
  TileAssemblySystem system;
  Pattern target;
  Budget budget;
  std::map<std::string, long long> stats;  // construction metadata for audits
  std::map<Loc, int> intended;             // planned placement of every cell
};

struct NotTwoColored : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSquare : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RoutingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Theorem-style constructions. Every compiled system is singly seeded and its
// terminal assembly paints exactly `target`.
CompiledSystem compile_single_pixel(int n, int i, int j);
CompiledSystem compile_multi_pixel(int n,
                                   const std::vector<std::pair<int, int>>& locs);
CompiledSystem compile_stripes(int n, int i, int j);
CompiledSystem compile_square_pattern(const Pattern& p);
CompiledSystem compile_grid_repeat(const Pattern& p, int m);

}  // namespace tam
