#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "tam/compilers.hpp"
#include "tam/counters.hpp"
#include "tam/emit.hpp"

namespace tam {

namespace {

// Hard-coded fallback for small squares: a chained spine column plus
// chained rows, one unique tile per cell.
void hardcode_square(SystemBuilder& b, const Pattern& target,
                     const std::string& ns) {
  int w = target.width, h = target.height;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      CellSpec c;
      c.color = target.at(x, y);
      if (x == 0) {
        if (y > 0) c.glue(Dir::S) = g2(ns + "!c" + std::to_string(y));
        if (y + 1 < h) c.glue(Dir::N) = g2(ns + "!c" + std::to_string(y + 1));
      }
      if (x > 0)
        c.glue(Dir::W) =
            g2(ns + "!r" + std::to_string(x) + "." + std::to_string(y));
      if (x + 1 < w)
        c.glue(Dir::E) =
            g2(ns + "!r" + std::to_string(x + 1) + "." + std::to_string(y));
      b.put({x, y, 0}, c);
    }
  b.set_seed({0, 0, 0});
}

struct Band {
  int y0 = 0;
  int height = 0;
  // Pixels east of the trunk / west of the trunk, as (machine row, y).
  std::vector<std::pair<int, int>> east, west;
  // Pixels sitting exactly on the base columns, by y.
  std::vector<int> east_base, west_base;
};

// One horizontal band piece: a hard-coded base column plus a segmented slab
// whose arm rows paint the band's pixels at per-variant heights. A single
// arm may blacken several heights (merged bands can stack pixels).
void emit_band_piece(SystemBuilder& b, const std::string& ns, Frame frame,
                     int machine_rows, int w_bits, int y0,
                     const std::vector<std::pair<int, int>>& pixels,
                     const std::vector<int>& base_pixels,
                     const std::string& anchor_label,
                     const std::string& face_lo, const std::string& face_hi) {
  std::map<int, std::set<int>> by_arm;  // arm row -> heights
  for (auto [row, y] : pixels) by_arm[row].insert(y - y0);
  std::vector<int> arm_rows;
  for (auto& [row, us] : by_arm) arm_rows.push_back(row);
  SegmentedPlan plan = segmented_plan(machine_rows, arm_rows, w_bits);

  // Per-variant blackened heights.
  std::vector<std::set<int>> black_u(plan.arm_values.size());
  for (std::size_t v = 0; v < plan.arm_origin.size(); ++v)
    if (plan.arm_origin[v] >= 0)
      black_u[v] = by_arm.at(arm_rows[plan.arm_origin[v]]);

  SlabConfig cfg;
  cfg.ns = ns;
  cfg.w_bits = w_bits;
  cfg.u0 = plan.u0;
  cfg.arm_values = plan.arm_values;
  cfg.rows = plan.rows;
  cfg.col_extra_tag = [black_u](int u) {
    std::string t = "p";
    for (const auto& us : black_u) t += us.count(u) ? '1' : '0';
    return t;
  };
  cfg.color = [&, black_u, y0](int r, int u) -> ColorId {
    if (r == 0)
      return std::count(base_pixels.begin(), base_pixels.end(), y0 + u)
                 ? kBlack
                 : kWhite;
    const SlabRowPlan& pl = cfg.rows[r - 1];
    if (pl.kind == SlabRowPlan::Arm && black_u[pl.arm_variant].count(u))
      return kBlack;
    return kWhite;
  };
  cfg.lo_face = [face_lo](int) { return g1(face_lo); };
  cfg.hi_face = [face_hi](int) { return g1(face_hi); };
  cfg.base_decor = [&](int u, CellSpec& c) {
    if (u == 0) c.glue(frame.r_neg()) = g2(anchor_label);
  };
  emit_slab(b, frame, cfg);
}

}  // namespace

CompiledSystem compile_multi_pixel(
    int n, const std::vector<std::pair<int, int>>& locs) {
  Pattern target = multi_pixel(n, locs);  // validates range and separation
  long long L = static_cast<long long>(locs.size());
  const std::string sym = "O(|L| log n)";
  const long long cap =
      40ll * (std::max(1ll, L) + 3) * ceil_log2(std::max(2, n)) + 340;

  SystemBuilder b(Dim::D2, 2);
  const int sep = ceil_log2(n);

  if (n <= 8 || sep < 4) {
    hardcode_square(b, target, "mp");
    CompiledSystem cs{b.build("mp"), target, {sym, cap, 0}, {}, {}};
    cs.budget.actual = static_cast<long long>(cs.system.tileset.tiles.size());
    cs.intended = b.intended_placements(cs.system);
    return cs;
  }

  const int w_bits = sep - 2;
  // Trunk window around the median pixel column.
  int x_t = n / 2 - sep / 2;
  if (!locs.empty()) {
    std::vector<int> xs;
    for (auto& [x, y] : locs) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    x_t = xs[xs.size() / 2] - sep / 2;
  }
  x_t = std::max(0, std::min(x_t, n - sep));
  const int xb_e = x_t + sep;  // east base column
  const int xb_w = x_t - 1;    // west base column
  const bool has_east = xb_e < n;
  const bool has_west = xb_w >= 0;

  // Cluster off-trunk pixels into bands of height sep; band 0 is anchored at
  // y=0 and always exists so fills have a south structure on both sides. The
  // top band is pulled down to fit the square, merging with its predecessor
  // when the pull makes them overlap.
  std::vector<Band> bands;
  bands.push_back(Band{0, sep, {}, {}, {}, {}});
  {
    std::vector<std::pair<int, int>> off;  // (y, x)
    for (auto& [x, y] : locs)
      if (x < x_t || x >= x_t + sep) off.push_back({y, x});
    std::sort(off.begin(), off.end());
    std::vector<std::vector<std::pair<int, int>>> groups(1);
    for (auto& [y, x] : off) {
      if (y >= bands.back().y0 + sep) {
        bands.push_back(Band{y, sep, {}, {}, {}, {}});
        groups.emplace_back();
      }
      groups.back().push_back({y, x});
    }
    if (bands.back().y0 + sep > n) {
      bands.back().y0 = n - sep;
      if (bands.size() > 1) {
        Band& prev = bands[bands.size() - 2];
        if (prev.y0 + prev.height > bands.back().y0) {
          prev.height = n - prev.y0;
          auto moved = std::move(groups.back());
          groups.pop_back();
          for (auto& p : moved) groups.back().push_back(p);
          bands.pop_back();
        }
      }
    }
    for (std::size_t k = 0; k < bands.size(); ++k)
      for (auto& [y, x] : groups[k]) {
        Band& band = bands[k];
        if (x == xb_e)
          band.east_base.push_back(y);
        else if (x == xb_w)
          band.west_base.push_back(y);
        else if (x > xb_e)
          band.east.push_back({x - xb_e, y});
        else
          band.west.push_back({xb_w - x, y});
      }
  }

  // Trunk arm rows: band anchors (above the base) plus on-trunk pixels.
  std::map<int, int> trunk_pixel;  // row -> u
  for (auto& [x, y] : locs)
    if (x >= x_t && x < x_t + sep) trunk_pixel[y] = x - x_t;
  std::set<int> arm_row_set;
  std::set<int> anchor_rows;
  for (const Band& band : bands)
    if (band.y0 > 0) {
      arm_row_set.insert(band.y0);
      anchor_rows.insert(band.y0);
    }
  for (auto& [y, u] : trunk_pixel)
    if (y > 0) arm_row_set.insert(y);
  std::vector<int> trunk_arms(arm_row_set.begin(), arm_row_set.end());
  SegmentedPlan tplan = segmented_plan(n - 1, trunk_arms, w_bits);

  std::vector<int> tblack_u(tplan.arm_values.size(), -1);
  std::vector<int> tanchor(tplan.arm_values.size(), -1);  // band index
  for (std::size_t v = 0; v < tplan.arm_origin.size(); ++v) {
    if (tplan.arm_origin[v] < 0) continue;
    int row = trunk_arms[tplan.arm_origin[v]];
    auto it = trunk_pixel.find(row);
    if (it != trunk_pixel.end()) tblack_u[v] = it->second;
    for (std::size_t k = 0; k < bands.size(); ++k)
      if (bands[k].y0 == row) tanchor[v] = static_cast<int>(k);
  }
  // Gap index per trunk row: fills west/east of the trunk take their lateral
  // support label from the gap they sit in.
  auto gap_of = [&](int r) {
    int g = 0;
    for (const Band& band : bands)
      if (band.y0 < r) ++g;
    return g;
  };

  SlabConfig tcfg;
  tcfg.ns = "mp.t";
  tcfg.w_bits = w_bits;
  tcfg.u0 = tplan.u0;
  tcfg.arm_values = tplan.arm_values;
  tcfg.rows = tplan.rows;
  tcfg.col_extra_tag = [tblack_u](int u) {
    std::string t = "p";
    for (int bu : tblack_u) t += (bu == u) ? '1' : '0';
    return t;
  };
  tcfg.color = [&, tblack_u](int r, int u) -> ColorId {
    if (r == 0) {
      auto it = trunk_pixel.find(0);
      return (it != trunk_pixel.end() && it->second == u) ? kBlack : kWhite;
    }
    const SlabRowPlan& pl = tcfg.rows[r - 1];
    if (pl.kind == SlabRowPlan::Arm && tblack_u[pl.arm_variant] == u)
      return kBlack;
    return kWhite;
  };
  auto anchor_east = [](int k) {
    return "mp!ae." + std::to_string(k);
  };
  auto anchor_west = [](int k) {
    return "mp!aw." + std::to_string(k);
  };
  tcfg.lo_face = [&](int r) -> Glue {
    if (r > 0 && anchor_rows.count(r)) {
      const SlabRowPlan& pl = tcfg.rows[r - 1];
      if (pl.kind == SlabRowPlan::Arm && tanchor[pl.arm_variant] >= 0 &&
          has_west)
        return g2(anchor_west(tanchor[pl.arm_variant]));
    }
    return g1("mp!gw." + std::to_string(gap_of(r)));
  };
  tcfg.hi_face = [&](int r) -> Glue {
    if (r > 0 && anchor_rows.count(r)) {
      const SlabRowPlan& pl = tcfg.rows[r - 1];
      if (pl.kind == SlabRowPlan::Arm && tanchor[pl.arm_variant] >= 0 &&
          has_east)
        return g2(anchor_east(tanchor[pl.arm_variant]));
    }
    return g1("mp!ge." + std::to_string(gap_of(r)));
  };
  tcfg.base_decor = [&](int u, CellSpec& c) {
    // Band 0 anchors straight off the trunk's base row.
    if (u == 0 && has_west) c.glue(Dir::W) = g2(anchor_west(0));
    if (u == sep - 1 && has_east) c.glue(Dir::E) = g2(anchor_east(0));
  };
  emit_slab(b, Frame::north({x_t, 0, 0}), tcfg);

  // Band pieces.
  for (std::size_t k = 0; k < bands.size(); ++k) {
    const Band& band = bands[k];
    std::string bt = "mp!bt." + std::to_string(k);
    std::string bb = "mp!bb." + std::to_string(k);
    if (has_east)
      emit_band_piece(b, "mp.e" + std::to_string(k),
                      Frame::east({xb_e, band.y0, 0}), n - 1 - xb_e,
                      band.height - 2, band.y0, band.east, band.east_base,
                      anchor_east(k), bb, bt);
    if (has_west)
      emit_band_piece(b, "mp.w" + std::to_string(k),
                      Frame::west({xb_w, band.y0, 0}), xb_w, band.height - 2,
                      band.y0, band.west, band.west_base, anchor_west(k), bb,
                      bt);
  }

  // Fill regions between consecutive bands (and above the last), per side.
  for (int side = 0; side < 2; ++side) {
    bool present = side == 0 ? has_east : has_west;
    if (!present) continue;
    int rx0 = side == 0 ? xb_e : 0;
    int rw = side == 0 ? n - xb_e : x_t;
    if (rw <= 0) continue;
    for (std::size_t k = 0; k < bands.size(); ++k) {
      int top = (k + 1 < bands.size()) ? bands[k + 1].y0 : n;
      int y0 = bands[k].y0 + bands[k].height;
      if (y0 >= top) continue;
      std::string we = (side == 0 ? "mp!ge." : "mp!gw.") +
                       std::to_string(static_cast<int>(k) + 1);
      emit_rect_fill(b, rx0, y0, rw, top - y0,
                     "mp!bt." + std::to_string(k), we);
    }
  }

  b.set_seed({x_t, 0, 0});
  if (b.target_pattern() != target)
    throw std::logic_error("multi_pixel: painted region mismatch");

  CompiledSystem cs{b.build("mp"), target, {sym, cap, 0}, {}, {}};
  cs.budget.actual = static_cast<long long>(cs.system.tileset.tiles.size());
  cs.intended = b.intended_placements(cs.system);
  cs.stats["bands"] = static_cast<long long>(bands.size());
  cs.stats["trunk_x"] = x_t;
  return cs;
}

}  // namespace tam
