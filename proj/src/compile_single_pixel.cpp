#include <cassert>

#include "tam/compilers.hpp"
#include "tam/counters.hpp"
#include "tam/emit.hpp"

namespace tam {

std::string budget_line(const Budget& b) {
  return "BUDGET " + b.symbolic + " " + std::to_string(b.cap) + " " +
         std::to_string(b.actual);
}

namespace {

// Fully hard-coded rectangle painting `target`: a vertical spine at column
// `sx` chained from the seed, rows chained east and west off the spine.
// Every cell gets a unique tile; used below the machine-size threshold.
void emit_hardcoded_square(SystemBuilder& b, const Pattern& target, int sx,
                           int sy, const std::string& ns) {
  (void)sy;
  int w = target.width, h = target.height;
  auto vg = [&](int yy) { return g2(ns + "!c" + std::to_string(yy)); };
  auto hg = [&](int xx, int yy) {
    return g2(ns + "!r" + std::to_string(xx) + "." + std::to_string(yy));
  };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      CellSpec c;
      c.color = target.at(x, y);
      if (x == sx) {
        if (y > 0) c.glue(Dir::S) = vg(y);
        if (y + 1 < h) c.glue(Dir::N) = vg(y + 1);
      }
      if (x > 0) c.glue(Dir::W) = hg(x, y);
      if (x + 1 < w) c.glue(Dir::E) = hg(x + 1, y);
      b.put({x, y, 0}, c);
    }
}

struct ArmLayout {
  bool present = false;
  Frame frame;
  int rows = 0;
  int lat0 = 0;   // world coordinate of the u=0 column along the box side
  int width = 0;  // lateral width (bits + 2)
};

}  // namespace

CompiledSystem compile_single_pixel(int n, int i, int j) {
  Pattern target = single_pixel(n, i, j);  // validates the arguments
  const std::string sym = "O(log n)";
  const long long cap = 16ll * ceil_log2(std::max(2, n)) + 260;

  SystemBuilder b(Dim::D2, 2);
  int s = ceil_log2(n) + 4;

  if (n < 2 * s - 1) {
    emit_hardcoded_square(b, target, i, j, "px");
    b.set_seed({i, j, 0});
    CompiledSystem cs{b.build("px"), target, {sym, cap, 0}, {}, {}};
    cs.budget.actual = static_cast<long long>(cs.system.tileset.tiles.size());
    cs.intended = b.intended_placements(cs.system);
    return cs;
  }

  // Counter box: an s x s ring with the seed pixel at one of its corners,
  // grown into the quadrant with the most room.
  int bx = (n - 1 - i >= i) ? i : i - s + 1;
  int by = (n - 1 - j >= j) ? j : j - s + 1;
  assert(bx >= 0 && bx + s <= n && by >= 0 && by + s <= n);

  RingConfig ring;
  ring.ns = "px.box";
  ring.x0 = bx;
  ring.y0 = by;
  ring.w = s;
  ring.h = s;
  ring.anchor = {i, j, 0};
  ring.color = [&](int x, int y) {
    return (x == i && y == j) ? kBlack : kWhite;
  };
  emit_ring(b, ring);

  int dN = n - (by + s), dE = n - (bx + s), dS = by, dW = bx;

  // Region fill labels (sn = N/S faces, we = E/W faces). Quadrants share a
  // label with the collar they grow from.
  const std::string sn_e = "px!q.e", we_n = "px!q.n";   // R1/R2, R2/R3
  const std::string we_e = "px!c.e", sn_n = "px!c.n";   // box faces
  const std::string sn_w = "px!q.w", we_w = "px!c.w";   // R4/R5, box west
  const std::string we_s = "px!q.s", sn_s = "px!c.s";   // R6/R7, box south
  const std::string we_nw = "px!f.nw", sn_se = "px!f.se";
  const std::string we_sw = "px!f.sw", sn_sw = "px!f.sw2";

  auto emit_arm = [&](const char* name, int d, Frame frame, int lat0,
                      const std::string& lo_face_label,
                      const std::string& hi_face_label) -> ArmLayout {
    ArmLayout a;
    if (d <= 0) return a;
    OneShotPlan plan = one_shot_plan(d);
    SlabConfig cfg;
    cfg.ns = std::string("px.a.") + name;
    cfg.w_bits = plan.w_bits;
    cfg.u0 = plan.u0;
    cfg.rows = plan.rows;
    cfg.external_base = true;
    cfg.lo_face = [=](int) { return g1(lo_face_label); };
    cfg.hi_face = [=](int) { return g1(hi_face_label); };
    SlabResult res = emit_slab(b, frame, cfg);
    assert(res.width <= s);
    // The box side doubles as the arm's base row.
    for (int u = 0; u < res.width; ++u) {
      Loc cell = frame.at(u, 0);
      if (!res.base_up[u].is_null())
        b.decorate(cell, frame.r_pos(), res.base_up[u]);
    }
    a.present = true;
    a.frame = frame;
    a.rows = d;
    a.lat0 = lat0;
    a.width = res.width;
    return a;
  };

  ArmLayout armN = emit_arm("n", dN, Frame::north({bx, by + s - 1, 0}), bx,
                            we_nw, we_n);
  ArmLayout armE = emit_arm("e", dE, Frame::east({bx + s - 1, by, 0}), by,
                            sn_se, sn_e);
  ArmLayout armS = emit_arm("s", dS, Frame::south({bx, by, 0}), bx,
                            we_sw, we_s);
  ArmLayout armW = emit_arm("w", dW, Frame::west({bx, by, 0}), by,
                            sn_sw, sn_w);

  int Wn = armN.present ? armN.width : 0;
  int We = armE.present ? armE.width : 0;
  int Ws = armS.present ? armS.width : 0;
  int Ww = armW.present ? armW.width : 0;

  // Box outward faces feeding the collar regions.
  for (int x = bx + Wn; x < bx + s; ++x)
    if (dN > 0) b.decorate({x, by + s - 1, 0}, Dir::N, g1(sn_n));
  for (int y = by + We; y < by + s; ++y)
    if (dE > 0) b.decorate({bx + s - 1, y, 0}, Dir::E, g1(we_e));
  for (int x = bx + Ws; x < bx + s; ++x)
    if (dS > 0) b.decorate({x, by, 0}, Dir::S, g1(sn_s));
  for (int y = by + Ww; y < by + s; ++y)
    if (dW > 0) b.decorate({bx, y, 0}, Dir::W, g1(we_w));

  // Fill regions: four collars along the box plus four corner quadrants.
  if (dE > 0)
    emit_rect_fill(b, bx + s, by + We, dE, s - We, sn_e, we_e);
  if (dE > 0 && dN > 0) emit_rect_fill(b, bx + s, by + s, dE, dN, sn_e, we_n);
  if (dN > 0)
    emit_rect_fill(b, bx + Wn, by + s, s - Wn, dN, sn_n, we_n);
  if (dW > 0)
    emit_rect_fill(b, 0, by + Ww, dW, s - Ww, sn_w, we_w);
  if (dW > 0 && dN > 0) emit_rect_fill(b, 0, by + s, dW, dN, sn_w, we_nw);
  if (dS > 0)
    emit_rect_fill(b, bx + Ws, 0, s - Ws, dS, sn_s, we_s);
  if (dE > 0 && dS > 0) emit_rect_fill(b, bx + s, 0, dE, dS, sn_se, we_s);
  if (dW > 0 && dS > 0) emit_rect_fill(b, 0, 0, dW, dS, sn_sw, we_sw);

  b.set_seed({i, j, 0});
  if (b.target_pattern() != target)
    throw std::logic_error("single_pixel: painted region mismatch");

  CompiledSystem cs{b.build("px"), target, {sym, cap, 0}, {}, {}};
  cs.budget.actual = static_cast<long long>(cs.system.tileset.tiles.size());
  cs.intended = b.intended_placements(cs.system);
  cs.stats["box_side"] = s;
  return cs;
}

}  // namespace tam
