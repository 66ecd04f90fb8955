#include <cassert>

#include "tam/compilers.hpp"
#include "tam/counters.hpp"
#include "tam/emit.hpp"

namespace tam {

namespace {

// Pattern cell as a rib bit: black is 0, white is 1.
char rib_bit(ColorId c) { return c == kBlack ? '0' : '1'; }
ColorId rib_color(char b) { return b == '0' ? kBlack : kWhite; }

}  // namespace

// Skeleton-and-ribs construction at temperature 1. Hard-coded bottom row and
// columns every 2*floor(log n)+1 positions; ribs keyed by the binary string
// of the pattern they paint, with the west glue carrying the full string and
// the east glue the string minus its first bit (mirrored for west ribs).
CompiledSystem compile_square_pattern(const Pattern& p) {
  if (p.width != p.height) throw NotSquare("pattern is not square");
  for (ColorId c : p.grid)
    if (c != kWhite && c != kBlack)
      throw NotTwoColored("pattern uses colors beyond White/Black");
  const int n = p.width;
  const std::string sym = "O(n^2/log n)";
  const long long cap =
      3ll * n * n / std::max(1, ceil_log2(std::max(2, n))) + 12ll * n + 64;

  SystemBuilder b(Dim::D2, 1);

  if (n == 1) {
    CellSpec c;
    c.color = p.at(0, 0);
    b.put({0, 0, 0}, c);
    b.set_seed({0, 0, 0});
    CompiledSystem cs{b.build("sq"), p, {sym, cap, 0}, {}, {}};
    cs.budget.actual = static_cast<long long>(cs.system.tileset.tiles.size());
    cs.intended = b.intended_placements(cs.system);
    return cs;
  }

  const int lam = floor_log2(n);
  const int pair_w = 2 * lam + 1;
  const int f = n / pair_w;
  const int r = n % pair_w;

  // Skeleton column positions plus per-column rib lengths.
  struct Col {
    int x;
    int west_len;
    int east_len;
  };
  std::vector<Col> cols;
  for (int k = 0; k < f; ++k) cols.push_back({lam + k * pair_w, lam, lam});
  if (r > 0) {
    if (r < lam + 1)
      cols.push_back({f * pair_w, 0, r - 1});
    else
      cols.push_back({f * pair_w + lam, lam, r - lam - 1});
  }

  auto east_string = [&](int x, int y, int len) {
    std::string s;
    for (int d = 1; d <= len; ++d) s += rib_bit(p.at(x + d, y));
    return s;
  };
  auto west_string = [&](int x, int y, int len) {
    std::string s;
    for (int d = 1; d <= len; ++d) s += rib_bit(p.at(x - d, y));
    return s;
  };

  // Complete rib families: every binary string of length 1..lam in both
  // directions, whether or not it occurs in this pattern.
  long long family_per_dir = 0;
  for (int len = 1; len <= lam; ++len)
    for (int v = 0; v < (1 << len); ++v) {
      std::string s;
      for (int i = len - 1; i >= 0; --i) s += ((v >> i) & 1) ? '1' : '0';
      CellSpec east;
      east.color = rib_color(s[0]);
      east.glue(Dir::W) = g1("sq!e." + s);
      if (len > 1) east.glue(Dir::E) = g1("sq!e." + s.substr(1));
      b.add_family_tile(east);
      CellSpec west;
      west.color = rib_color(s[0]);
      west.glue(Dir::E) = g1("sq!w." + s);
      if (len > 1) west.glue(Dir::W) = g1("sq!w." + s.substr(1));
      b.add_family_tile(west);
      ++family_per_dir;
    }

  // Rib cells for rows >= 1 (row 0 is covered by the hard-coded bottom row
  // and the absorbed suffixes below).
  for (const Col& c : cols)
    for (int y = 1; y < n; ++y) {
      std::string es = east_string(c.x, y, c.east_len);
      for (int d = 1; d <= c.east_len; ++d) {
        CellSpec cell;
        std::string suffix = es.substr(d - 1);
        cell.color = rib_color(suffix[0]);
        cell.glue(Dir::W) = g1("sq!e." + suffix);
        if (suffix.size() > 1) cell.glue(Dir::E) = g1("sq!e." + suffix.substr(1));
        b.put({c.x + d, y, 0}, cell);
      }
      std::string ws = west_string(c.x, y, c.west_len);
      for (int d = 1; d <= c.west_len; ++d) {
        CellSpec cell;
        std::string suffix = ws.substr(d - 1);
        cell.color = rib_color(suffix[0]);
        cell.glue(Dir::E) = g1("sq!w." + suffix);
        if (suffix.size() > 1) cell.glue(Dir::W) = g1("sq!w." + suffix.substr(1));
        b.put({c.x - d, y, 0}, cell);
      }
    }

  // Hard-coded skeleton columns (rows >= 1; the base cell is part of the
  // bottom row).
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Col& c = cols[k];
    auto vg = [&](int y) {
      return g1("sq!c" + std::to_string(k) + "." + std::to_string(y));
    };
    for (int y = 1; y < n; ++y) {
      CellSpec cell;
      cell.color = p.at(c.x, y);
      cell.glue(Dir::S) = vg(y);
      if (y + 1 < n) cell.glue(Dir::N) = vg(y + 1);
      if (c.east_len > 0)
        cell.glue(Dir::E) = g1("sq!e." + east_string(c.x, y, c.east_len));
      if (c.west_len > 0)
        cell.glue(Dir::W) = g1("sq!w." + west_string(c.x, y, c.west_len));
      b.put({c.x, y, 0}, cell);
    }
  }

  // Hard-coded bottom row from the seed at (lam, 0) east to one past the
  // last column (the paper's f(2 lam+1)+1 / +lam+1 extent), clamped to the
  // square; its final cell hands off to the shared east-rib suffix tiles.
  const Col& last = cols.back();
  int row_end = std::min(last.x + 1, n - 1);
  for (int x = lam; x <= row_end; ++x) {
    CellSpec cell;
    cell.color = p.at(x, 0);
    if (x > lam) cell.glue(Dir::W) = g1("sq!b" + std::to_string(x));
    if (x < row_end) cell.glue(Dir::E) = g1("sq!b" + std::to_string(x + 1));
    // Column bases expose the column's vertical glue.
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (cols[k].x == x)
        cell.glue(Dir::N) = g1("sq!c" + std::to_string(k) + ".1");
    if (x == lam && lam > 0)
      cell.glue(Dir::W) = g1("sq!w." + west_string(lam, 0, lam));
    if (x == row_end && last.x + last.east_len > row_end) {
      // Absorb the first east-rib cell of the last column at row 0.
      std::string es = east_string(last.x, 0, last.east_len);
      cell.glue(Dir::E) = g1("sq!e." + es.substr(1));
    }
    b.put({x, 0, 0}, cell);
  }
  // Row-0 east-rib suffix cells beyond the bottom row.
  {
    std::string es = east_string(last.x, 0, last.east_len);
    for (int d = row_end - last.x + 1; d <= last.east_len; ++d) {
      CellSpec cell;
      std::string suffix = es.substr(d - 1);
      cell.color = rib_color(suffix[0]);
      cell.glue(Dir::W) = g1("sq!e." + suffix);
      if (suffix.size() > 1) cell.glue(Dir::E) = g1("sq!e." + suffix.substr(1));
      b.put({last.x + d, 0, 0}, cell);
    }
  }
  // Row-0 west-rib cells west of the seed.
  {
    std::string ws = west_string(lam, 0, lam);
    for (int d = 1; d <= lam; ++d) {
      CellSpec cell;
      std::string suffix = ws.substr(d - 1);
      cell.color = rib_color(suffix[0]);
      cell.glue(Dir::E) = g1("sq!w." + suffix);
      if (suffix.size() > 1) cell.glue(Dir::W) = g1("sq!w." + suffix.substr(1));
      b.put({lam - d, 0, 0}, cell);
    }
  }

  b.set_seed({lam, 0, 0});
  if (b.target_pattern() != p)
    throw std::logic_error("square: painted region mismatch");

  CompiledSystem cs{b.build("sq"), p, {sym, cap, 0}, {}, {}};
  cs.budget.actual = static_cast<long long>(cs.system.tileset.tiles.size());
  cs.intended = b.intended_placements(cs.system);
  cs.stats["east_rib_family"] = family_per_dir;
  cs.stats["west_rib_family"] = family_per_dir;
  cs.stats["rib_pair_width"] = pair_w;
  cs.stats["full_rib_pairs"] = f;
  cs.stats["remainder"] = r;
  cs.stats["seed_x"] = lam;
  cs.stats["bottom_row_end"] = row_end;
  return cs;
}

}  // namespace tam
