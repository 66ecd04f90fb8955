#include "tam/patterns.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace tam {

std::vector<std::string> default_palette() {
  return {"White", "Black", "Red", "Green", "Aqua", "Blue", "Yellow", "Fuchsia"};
}

Pattern Pattern::filled(int w, int h, ColorId c, std::vector<std::string> pal) {
  Pattern p;
  p.width = w;
  p.height = h;
  p.grid.assign(static_cast<std::size_t>(w) * h, c);
  p.palette = std::move(pal);
  return p;
}

int Pattern::count(ColorId c) const {
  return static_cast<int>(std::count(grid.begin(), grid.end(), c));
}

std::set<ColorId> Pattern::colors_used() const {
  return {grid.begin(), grid.end()};
}

Pattern Pattern::transpose() const {
  Pattern t = filled(height, width, 0, palette);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) t.at(y, x) = at(x, y);
  return t;
}

SeparationViolation::SeparationViolation(std::pair<int, int> a_,
                                         std::pair<int, int> b_)
    : std::runtime_error("pixels (" + std::to_string(a_.first) + "," +
                         std::to_string(a_.second) + ") and (" +
                         std::to_string(b_.first) + "," +
                         std::to_string(b_.second) + ") violate separation"),
      a(a_),
      b(b_) {}

int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

int floor_log2(int n) {
  int k = 0;
  while ((1 << (k + 1)) <= n) ++k;
  return k;
}

Pattern single_pixel(int n, int i, int j) {
  if (n < 1) throw OutOfRange("single_pixel: n must be positive");
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw OutOfRange("single_pixel: pixel outside the square");
  Pattern p = Pattern::filled(n, n, kWhite);
  p.at(i, j) = kBlack;
  return p;
}

Pattern multi_pixel(int n, const std::vector<std::pair<int, int>>& locs) {
  if (n < 1) throw OutOfRange("multi_pixel: n must be positive");
  int sep = ceil_log2(n);
  for (auto& [x, y] : locs)
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw OutOfRange("multi_pixel: pixel outside the square");
  for (std::size_t a = 0; a < locs.size(); ++a)
    for (std::size_t b = a + 1; b < locs.size(); ++b) {
      if (locs[a] == locs[b]) throw SeparationViolation(locs[a], locs[b]);
      if (std::abs(locs[a].first - locs[b].first) < sep &&
          std::abs(locs[a].second - locs[b].second) < sep)
        throw SeparationViolation(locs[a], locs[b]);
    }
  Pattern p = Pattern::filled(n, n, kWhite);
  for (auto& [x, y] : locs) p.at(x, y) = kBlack;
  return p;
}

Pattern stripes(int n, int i, int j) {
  if (n < 1) throw OutOfRange("stripes: n must be positive");
  if (i < 1 || j < 1 || i >= n || j >= n)
    throw OutOfRange("stripes: require 1 <= i,j < n");
  Pattern p = Pattern::filled(n, n, kWhite);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (x % i == 0 || y % j == 0) p.at(x, y) = kBlack;
  return p;
}

Pattern grid_repeat(const Pattern& p, int m) {
  if (m < 1) throw OutOfRange("grid_repeat: m must be positive");
  int n = p.width;
  Pattern out = Pattern::filled(n * m, n * m, 0, p.palette);
  for (int y = 0; y < n * m; ++y)
    for (int x = 0; x < n * m; ++x) out.at(x, y) = p.at(x % n, y % n);
  return out;
}

std::variant<Pattern, NotRectangular> assembly_pattern(
    const TileAssemblySystem& sys, const Assembly& asm_, bool normalize,
    std::optional<int> z_plane) {
  int minx = 0, maxx = -1, miny = 0, maxy = -1;
  bool first = true;
  for (const auto& [loc, idx] : asm_.placements) {
    if (z_plane && loc.z != *z_plane) continue;
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
  if (first) return NotRectangular{Loc{0, 0, 0}};
  int w = maxx - minx + 1, h = maxy - miny + 1;
  Pattern p = Pattern::filled(w, h, 0, sys.tileset.palette);
  int zp = z_plane.value_or(0);
  for (int y = miny; y <= maxy; ++y)
    for (int x = minx; x <= maxx; ++x) {
      auto t = asm_.tile_at(Loc{x, y, zp});
      if (!t) return NotRectangular{Loc{x, y, zp}};
      int px = normalize ? x - minx : x;
      int py = normalize ? y - miny : y;
      p.at(px, py) = sys.tileset.tiles[*t].color;
    }
  return p;
}

std::string serialize_pattern(const Pattern& p) {
  std::ostringstream out;
  out << "PAT v1\n";
  out << "SIZE " << p.width << " " << p.height << "\n";
  out << "PALETTE";
  for (std::size_t i = 0; i < p.palette.size(); ++i)
    out << " " << i << "=" << p.palette[i];
  out << "\n";
  for (int y = p.height - 1; y >= 0; --y) {
    out << "ROW";
    for (int x = 0; x < p.width; ++x) out << " " << p.at(x, y);
    out << "\n";
  }
  return out.str();
}

Pattern parse_pattern(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Pattern p;
  bool saw_header = false, saw_size = false;
  int rows_read = 0;
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
      if (kw != "PAT" || ver != "v1")
        throw ParseError(lineno, "expected 'PAT v1' header");
      saw_header = true;
      continue;
    }
    if (kw == "SIZE") {
      if (!(ls >> p.width >> p.height) || p.width < 1 || p.height < 1)
        throw ParseError(lineno, "bad SIZE");
      p.grid.assign(static_cast<std::size_t>(p.width) * p.height, 0);
      saw_size = true;
    } else if (kw == "PALETTE") {
      std::string entry;
      while (ls >> entry) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
          throw ParseError(lineno, "bad palette entry '" + entry + "'");
        p.palette.push_back(entry.substr(eq + 1));
      }
    } else if (kw == "ROW") {
      if (!saw_size) throw ParseError(lineno, "ROW before SIZE");
      if (rows_read >= p.height) throw ParseError(lineno, "too many ROW lines");
      int y = p.height - 1 - rows_read;
      for (int x = 0; x < p.width; ++x) {
        int c;
        if (!(ls >> c)) throw ParseError(lineno, "short ROW line");
        if (c < 0 || c >= static_cast<int>(p.palette.size()))
          throw ParseError(lineno, "color id out of palette range");
        p.at(x, y) = c;
      }
      int extra;
      if (ls >> extra) throw ParseError(lineno, "long ROW line");
      ++rows_read;
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!saw_size) throw ParseError(lineno, "missing SIZE");
  if (rows_read != p.height) throw ParseError(lineno, "missing ROW lines");
  return p;
}

std::vector<Rgb> default_color_map() {
  return {
      {255, 255, 255},  // White
      {0, 0, 0},        // Black
      {220, 30, 30},    // Red
      {30, 170, 40},    // Green
      {60, 210, 210},   // Aqua
      {40, 70, 220},    // Blue
      {235, 220, 40},   // Yellow
      {225, 60, 225},   // Fuchsia
  };
}

std::string export_ppm(const Pattern& p, const std::vector<Rgb>& color_map) {
  for (ColorId c : p.grid)
    if (c < 0 || c >= static_cast<int>(color_map.size()))
      throw MissingColor("no RGB entry for color id " + std::to_string(c));
  std::ostringstream out;
  out << "P3\n" << p.width << " " << p.height << "\n255\n";
  for (int y = p.height - 1; y >= 0; --y) {
    for (int x = 0; x < p.width; ++x) {
      const Rgb& c = color_map[p.at(x, y)];
      out << c.r << " " << c.g << " " << c.b << "\n";
    }
  }
  return out.str();
}

}  // namespace tam
