#include "tam/skeleton.hpp"

#include <vector>

namespace tam {

namespace {

char rib_bit(ColorId c) { return c == kBlack ? '0' : '1'; }
ColorId rib_color(char b) { return b == '0' ? kBlack : kWhite; }

}  // namespace

SkeletonOut emit_skeleton(SystemBuilder& b, const SkeletonSpec& spec) {
  const int lam = spec.lam;
  const int pair_w = 2 * lam + 1;
  const int f = spec.width / pair_w;
  const int r = spec.width % pair_w;
  auto g = [&](const std::string& label) { return Glue{label, spec.strength}; };

  struct Col {
    int x;  // region-relative
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
  // Degenerate widths below one rib pair: a single column with short ribs.
  if (cols.empty() || (f == 0 && r > 0 && r < lam + 1)) {
    cols.clear();
    int cx = std::min(lam, spec.width - 1);
    cols.push_back({cx, cx, spec.width - 1 - cx});
  }

  SkeletonOut out;
  if (spec.emit_families) {
    for (int len = 1; len <= lam; ++len)
      for (int v = 0; v < (1 << len); ++v) {
        std::string s;
        for (int i = len - 1; i >= 0; --i) s += ((v >> i) & 1) ? '1' : '0';
        CellSpec east;
        east.color = rib_color(s[0]);
        east.glue(Dir::W) = g(spec.ns + "!e." + s);
        if (len > 1) east.glue(Dir::E) = g(spec.ns + "!e." + s.substr(1));
        b.add_family_tile(east);
        CellSpec west;
        west.color = rib_color(s[0]);
        west.glue(Dir::E) = g(spec.ns + "!w." + s);
        if (len > 1) west.glue(Dir::W) = g(spec.ns + "!w." + s.substr(1));
        b.add_family_tile(west);
        ++out.family_per_dir;
      }
  }

  auto east_string = [&](int x, int y, int len) {
    std::string s;
    for (int d = 1; d <= len; ++d) s += rib_bit(spec.color(x + d, y));
    return s;
  };
  auto west_string = [&](int x, int y, int len) {
    std::string s;
    for (int d = 1; d <= len; ++d) s += rib_bit(spec.color(x - d, y));
    return s;
  };

  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Col& c = cols[k];
    int wx = spec.x0 + c.x;
    auto vg = [&](int y) {
      return g(spec.ns + "!c" + std::to_string(k) + "." + std::to_string(y));
    };
    out.base_anchors[wx] = vg(1);
    for (int row = 1; row <= spec.rows; ++row) {
      int wy = spec.y0 + row;
      CellSpec cell;
      cell.color = spec.color(wx, wy);
      cell.glue(Dir::S) = vg(row);
      if (row < spec.rows) cell.glue(Dir::N) = vg(row + 1);
      if (c.east_len > 0)
        cell.glue(Dir::E) = g(spec.ns + "!e." + east_string(wx, wy, c.east_len));
      if (c.west_len > 0)
        cell.glue(Dir::W) = g(spec.ns + "!w." + west_string(wx, wy, c.west_len));
      b.put({wx, wy, 0}, cell);
      // Rib cells.
      std::string es = east_string(wx, wy, c.east_len);
      for (int d = 1; d <= c.east_len; ++d) {
        CellSpec rc;
        std::string suffix = es.substr(d - 1);
        rc.color = rib_color(suffix[0]);
        rc.glue(Dir::W) = g(spec.ns + "!e." + suffix);
        if (suffix.size() > 1) rc.glue(Dir::E) = g(spec.ns + "!e." + suffix.substr(1));
        b.put({wx + d, wy, 0}, rc);
      }
      std::string ws = west_string(wx, wy, c.west_len);
      for (int d = 1; d <= c.west_len; ++d) {
        CellSpec rc;
        std::string suffix = ws.substr(d - 1);
        rc.color = rib_color(suffix[0]);
        rc.glue(Dir::E) = g(spec.ns + "!w." + suffix);
        if (suffix.size() > 1) rc.glue(Dir::W) = g(spec.ns + "!w." + suffix.substr(1));
        b.put({wx - d, wy, 0}, rc);
      }
    }
  }
  return out;
}

}  // namespace tam
