#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tam/core.hpp"

namespace tam {

// Default palette shared by all generators. Index 0 is always White.
enum Color : ColorId {
  kWhite = 0,
  kBlack = 1,
  kRed = 2,
  kGreen = 3,
  kAqua = 4,
  kBlue = 5,
  kYellow = 6,
  kFuchsia = 7,
};

std::vector<std::string> default_palette();

// Finite colored grid. (0,0) is the southwest corner; x grows east, y north.
struct Pattern {
  int width = 0;
  int height = 0;
  std::vector<ColorId> grid;  // row-major, index = y * width + x
  std::vector<std::string> palette;

  ColorId at(int x, int y) const { return grid[y * width + x]; }
  ColorId& at(int x, int y) { return grid[y * width + x]; }

  static Pattern filled(int w, int h, ColorId c,
                        std::vector<std::string> pal = default_palette());

  int count(ColorId c) const;
  std::set<ColorId> colors_used() const;
  Pattern transpose() const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.width == b.width && a.height == b.height && a.grid == b.grid;
  }
  friend bool operator!=(const Pattern& a, const Pattern& b) {
    return !(a == b);
  }
};

struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SeparationViolation : std::runtime_error {
  std::pair<int, int> a, b;
  SeparationViolation(std::pair<int, int> a_, std::pair<int, int> b_);
};

// n x n, Black exactly at (i, j).
Pattern single_pixel(int n, int i, int j);

// n x n, Black exactly on L; every pair must satisfy
// |dx| >= ceil(log2 n) or |dy| >= ceil(log2 n).
Pattern multi_pixel(int n, const std::vector<std::pair<int, int>>& locs);

// n x n, Black where x mod i == 0 or y mod j == 0.
Pattern stripes(int n, int i, int j);

// nm x nm grid of m x m copies of P.
Pattern grid_repeat(const Pattern& p, int m);

// ceil(log2 n) for n >= 1 (0 for n == 1).
int ceil_log2(int n);
// floor(log2 n) for n >= 1.
int floor_log2(int n);

// Extracts the colored grid of a rectangular assembly. When z_plane is set,
// only tiles in that plane are considered. Returns the first hole on failure.
struct NotRectangular {
  Loc first_hole;
};
std::variant<Pattern, NotRectangular> assembly_pattern(
    const TileAssemblySystem& sys, const Assembly& asm_, bool normalize = true,
    std::optional<int> z_plane = std::nullopt);

// PAT v1 text codec; rows are written north first.
std::string serialize_pattern(const Pattern& p);
Pattern parse_pattern(const std::string& text);

struct Rgb {
  int r = 0, g = 0, b = 0;
};
struct MissingColor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default RGB values for the 8-color palette.
std::vector<Rgb> default_color_map();

// Plain-text P3 PPM; rows emitted north to south.
std::string export_ppm(const Pattern& p, const std::vector<Rgb>& color_map);

}  // namespace tam
