#include <iostream>

#include "doctest.h"
#include "tam/counters.hpp"
#include "tam/sim.hpp"

using namespace tam;

namespace {

// Simulates a painted builder's system to terminality and checks the
// terminal assembly covers exactly the painted cells with painted colors.
void check_builds_exactly(const SystemBuilder& b, const TileAssemblySystem& sys,
                          std::uint64_t cap = 1 << 20) {
  SimState st = init_state(sys);
  auto r = run(st, cap, AttachmentPolicy::paper());
  REQUIRE(r.terminal);
  REQUIRE(st.assembly.size() == b.cell_count());
  for (const auto& [loc, spec] : b.cells()) {
    auto t = st.assembly.tile_at(loc);
    REQUIRE(t);
    CHECK(sys.tileset.tiles[*t].color == spec.color);
  }
  // A couple of random orders reach the same terminal assembly.
  for (std::uint64_t seed : {7ull, 99ull}) {
    SimState st2 = init_state(sys);
    auto r2 = run(st2, cap, AttachmentPolicy::random(seed));
    REQUIRE(r2.terminal);
    CHECK(st2.assembly.placements == st.assembly.placements);
  }
}

}  // namespace

TEST_CASE("one-shot slab covers its rectangle and stops") {
  for (int rows : {1, 2, 3, 4, 7, 12, 31}) {
    CAPTURE(rows);
    SystemBuilder b(Dim::D2, 2);
    OneShotPlan plan = one_shot_plan(rows);
    SlabConfig cfg;
    cfg.ns = "t";
    cfg.w_bits = plan.w_bits;
    cfg.u0 = plan.u0;
    cfg.rows = plan.rows;
    SlabResult res = emit_slab(b, Frame::north({0, 0, 0}), cfg);
    CHECK(res.width == plan.w_bits + 2);
    b.set_seed({0, 0, 0});
    auto sys = b.build();
    CHECK(b.cell_count() == static_cast<std::size_t>(res.width * (rows + 1)));
    check_builds_exactly(b, sys);
  }
}

TEST_CASE("slab tile count stays flat as rows grow") {
  auto tiles_for = [](int rows) {
    SystemBuilder b(Dim::D2, 2);
    OneShotPlan plan = one_shot_plan(rows);
    SlabConfig cfg;
    cfg.ns = "t";
    cfg.w_bits = 6;  // fixed width so only row count varies
    cfg.u0.assign(6, 0);
    int u0 = (1 << 6) - 1 - (rows + 1) / 2;
    for (int i = 0; i < 6; ++i) cfg.u0[i] = (u0 >> i) & 1;
    cfg.rows = plan.rows;
    emit_slab(b, Frame::north({0, 0, 0}), cfg);
    b.set_seed({0, 0, 0});
    return b.build().tileset.tiles.size();
  };
  auto t20 = tiles_for(20);
  auto t40 = tiles_for(40);
  auto t60 = tiles_for(60);
  CHECK(t40 <= t20 + 4);
  CHECK(t60 <= t40 + 4);
}

TEST_CASE("make_counter geometry, done face and ticks") {
  SystemBuilder b(Dim::D2, 2);
  CounterSpec spec;
  spec.width = 3;
  spec.start = 0;
  spec.end = 7;
  spec.ns = "k";
  spec.orientation = CounterSpec::Orient::North;
  CounterGroup g = make_counter(b, spec, {0, 0, 0});
  CHECK(g.length == 8);
  CHECK(g.width == 3 + 2);
  b.set_seed({0, 0, 0});
  auto sys = b.build();
  check_builds_exactly(b, sys);

  // Rectangle is width x length.
  for (int y = 0; y < g.length; ++y)
    for (int x = 0; x < g.width; ++x) CHECK(b.painted({x, y, 0}));
  CHECK_FALSE(b.painted({0, g.length, 0}));

  // Final row exposes the done face northward; every row has tick faces.
  const CellSpec* top = b.cell({0, g.length - 1, 0});
  REQUIRE(top != nullptr);
  CHECK(top->glue(Dir::N).label == "k.done");
  const CellSpec* mid = b.cell({0, 2, 0});
  REQUIRE(mid != nullptr);
  CHECK(mid->glue(Dir::W).label == "k.tick");
  CHECK(b.cell({0, g.length - 1, 0})->glue(Dir::W).label == "k.ticktop");
}

TEST_CASE("make_counter degenerate single row") {
  SystemBuilder b(Dim::D2, 2);
  CounterSpec spec;
  spec.width = 1;
  spec.start = 0;
  spec.end = 0;
  spec.ns = "k";
  CounterGroup g = make_counter(b, spec, {0, 0, 0});
  CHECK(g.length == 1);
  const CellSpec* c = b.cell({0, 0, 0});
  REQUIRE(c != nullptr);
  CHECK(c->glue(Dir::N).label == "k.done");
}

TEST_CASE("make_counter black rows") {
  SystemBuilder b(Dim::D2, 2);
  CounterSpec spec;
  spec.width = 4;
  spec.start = 0;
  spec.end = 9;
  spec.ns = "k";
  spec.black_rows = {3, 7};
  CounterGroup g = make_counter(b, spec, {0, 0, 0});
  b.set_seed({0, 0, 0});
  auto sys = b.build();
  check_builds_exactly(b, sys);
  for (int y = 0; y < g.length; ++y) {
    bool black = (y == 3 || y == 7);
    for (int x = 0; x < g.width; ++x)
      CHECK((b.cell({x, y, 0})->color == kBlack) == black);
  }
}

TEST_CASE("make_counter rejects bad specs") {
  SystemBuilder b(Dim::D2, 2);
  CounterSpec spec;
  spec.width = 2;
  spec.start = 5;
  spec.end = 3;
  spec.ns = "k";
  CHECK_THROWS_AS(make_counter(b, spec, {0, 0, 0}), SpecError);
  spec.start = 0;
  spec.end = 4;  // needs 3 bits
  CHECK_THROWS_AS(make_counter(b, spec, {0, 0, 0}), SpecError);
}

TEST_CASE("two counters with distinct namespaces compose") {
  SystemBuilder b(Dim::D2, 2);
  CounterSpec a;
  a.width = 3;
  a.start = 0;
  a.end = 5;
  a.ns = "ka";
  CounterSpec c;
  c.width = 3;
  c.start = 0;
  c.end = 5;
  c.ns = "kb";
  make_counter(b, a, {0, 0, 0});
  make_counter(b, c, {20, 0, 0});
  // Namespace prefixes keep glue labels disjoint.
  auto sys = [&] {
    SystemBuilder bb = b;
    bb.set_seed({0, 0, 0});
    return bb.build();
  }();
  std::set<std::string> la, lb;
  for (const auto& t : sys.tileset.tiles)
    for (int d = 0; d < kNumDirs3D; ++d) {
      const std::string& l = t.glues[d].label;
      if (l.rfind("ka", 0) == 0) la.insert(l);
      if (l.rfind("kb", 0) == 0) lb.insert(l);
    }
  for (const auto& l : la) CHECK(lb.count(l) == 0);
}

TEST_CASE("ring with interior fill") {
  SystemBuilder b(Dim::D2, 2);
  RingConfig cfg;
  cfg.ns = "r";
  cfg.x0 = 0;
  cfg.y0 = 0;
  cfg.w = 5;
  cfg.h = 4;
  cfg.anchor = {0, 0, 0};
  cfg.color = [](int x, int y) { return x == 2 && y == 0 ? kBlack : kWhite; };
  emit_ring(b, cfg);
  b.set_seed({0, 0, 0});
  auto sys = b.build();
  CHECK(b.cell_count() == 20);
  check_builds_exactly(b, sys);
}

TEST_CASE("rect fill seeds from two matching faces") {
  SystemBuilder b(Dim::D2, 2);
  // An L of hard-coded tiles providing south and west faces.
  for (int x = 0; x < 5; ++x) {
    CellSpec c;
    c.color = kBlack;
    if (x > 0) c.glue(Dir::W) = g2("L.s" + std::to_string(x));
    if (x < 4) c.glue(Dir::E) = g2("L.s" + std::to_string(x + 1));
    c.glue(Dir::N) = x == 0 ? g2("L.w1") : g1("fill.sn");
    b.put({x, 0, 0}, c);
  }
  for (int y = 1; y < 4; ++y) {
    CellSpec c;
    c.color = kBlack;
    c.glue(Dir::S) = g2("L.w" + std::to_string(y));
    if (y < 3) c.glue(Dir::N) = g2("L.w" + std::to_string(y + 1));
    c.glue(Dir::E) = g1("fill.we");
    b.put({0, y, 0}, c);
  }
  emit_rect_fill(b, 1, 1, 4, 3, "fill.sn", "fill.we", kWhite);
  b.set_seed({0, 0, 0});
  auto sys = b.build();
  check_builds_exactly(b, sys);
}
