#include "doctest.h"
#include "tam/core.hpp"

using namespace tam;

namespace {

TileType make_tile(const std::string& name, ColorId color, Glue n, Glue e,
                   Glue s, Glue w) {
  TileType t;
  t.name = name;
  t.color = color;
  t.glue(Dir::N) = n;
  t.glue(Dir::E) = e;
  t.glue(Dir::S) = s;
  t.glue(Dir::W) = w;
  return t;
}

TileAssemblySystem one_tile_system(const TileType& t, int temp) {
  TileAssemblySystem sys;
  sys.tileset.palette = {"White", "Black"};
  sys.tileset.tiles = {t};
  sys.temperature = temp;
  sys.seed.place({0, 0, 0}, 0);
  normalize_system(sys);
  return sys;
}

}  // namespace

TEST_CASE("glue_binds equal label and strength") {
  CHECK(glue_binds({"a", 2}, {"a", 2}) == 2);
  CHECK(glue_binds({"a", 2}, {"a", 1}) == 0);
  CHECK(glue_binds({"a", 2}, {"b", 2}) == 0);
  CHECK(glue_binds({}, {}) == 0);
  CHECK(glue_binds({"x", 1}, {"x", 1}) == 1);
}

TEST_CASE("glue_binds is symmetric") {
  std::vector<Glue> glues = {{}, {"a", 1}, {"a", 2}, {"b", 1}, {"c", 2}};
  for (const auto& a : glues)
    for (const auto& b : glues) CHECK(glue_binds(a, b) == glue_binds(b, a));
}

TEST_CASE("attachment_strength sums matching neighbors") {
  // tau=2 system; candidate binds to one strength-2 neighbor or two
  // strength-1 neighbors.
  TileAssemblySystem sys;
  sys.tileset.palette = {"White"};
  sys.temperature = 2;
  sys.tileset.tiles.push_back(
      make_tile("anchor2", 0, {}, {"s2", 2}, {}, {}));          // 0
  sys.tileset.tiles.push_back(
      make_tile("anchor1e", 0, {"s1", 1}, {}, {}, {}));         // 1
  sys.tileset.tiles.push_back(
      make_tile("anchor1n", 0, {}, {}, {}, {"s1b", 1}));        // 2
  sys.tileset.tiles.push_back(
      make_tile("cand", 0, {}, {"s1b", 1}, {"s1", 1}, {"s2", 2}));  // 3
  sys.seed.place({0, 0, 0}, 0);
  normalize_system(sys);

  Assembly a = sys.seed;
  const TileType& cand = sys.tileset.tiles[3];
  CHECK(attachment_strength(sys, a, {1, 0, 0}, cand) == 2);

  Assembly b;
  b.place({0, 0, 0}, 1);
  CHECK(attachment_strength(sys, b, {0, 1, 0}, cand) == 1);
  b.place({1, 1, 0}, 2);
  CHECK(attachment_strength(sys, b, {0, 1, 0}, cand) == 2);

  CHECK_THROWS_AS(attachment_strength(sys, b, {0, 0, 0}, cand),
                  ValidationError);
}

TEST_CASE("attachment_strength is monotone in neighbors") {
  TileAssemblySystem sys;
  sys.tileset.palette = {"White"};
  sys.temperature = 2;
  sys.tileset.tiles.push_back(make_tile("n", 0, {}, {}, {"g", 1}, {}));
  sys.tileset.tiles.push_back(make_tile("e", 0, {}, {}, {}, {"h", 1}));
  sys.tileset.tiles.push_back(
      make_tile("cand", 0, {"g", 1}, {"h", 1}, {}, {}));
  sys.seed.place({0, 0, 0}, 0);
  normalize_system(sys);

  const TileType& cand = sys.tileset.tiles[2];
  Assembly a;
  a.place({0, 1, 0}, 0);
  int s1 = attachment_strength(sys, a, {0, 0, 0}, cand);
  a.place({1, 0, 0}, 1);
  int s2 = attachment_strength(sys, a, {0, 0, 0}, cand);
  CHECK(s1 <= s2);
  CHECK(s2 == 2);
}

TEST_CASE("normalization clamps overlong strengths") {
  TileType t = make_tile("t", 0, {"g", 5}, {}, {}, {});
  TileAssemblySystem sys = one_tile_system(t, 2);
  CHECK(sys.tileset.tiles[0].glue(Dir::N).strength == 2);
}

TEST_CASE("codec round trip for a 1-tile system") {
  TileType t = make_tile("solo", 0, {}, {}, {}, {});
  TileAssemblySystem sys = one_tile_system(t, 1);
  std::string text = serialize_system(sys);
  // header, DIM, TEMP, PALETTE, TILE, SEED
  CHECK(text ==
        "TAMSET v1\nDIM 2\nTEMP 1\nPALETTE 0=White 1=Black\n"
        "TILE solo COLOR 0 N -|0 E -|0 S -|0 W -|0\nSEED solo 0 0\n");
  TileAssemblySystem back = parse_system(text);
  CHECK(serialize_system(back) == text);
  CHECK(back.temperature == 1);
  CHECK(back.tileset.tiles.size() == 1);
  CHECK(back.seed.size() == 1);
}

TEST_CASE("codec round trips barely-3D systems") {
  TileAssemblySystem sys;
  sys.dim = Dim::Barely3D;
  sys.temperature = 2;
  sys.tileset.palette = {"White"};
  TileType t = make_tile("up", 0, {}, {}, {}, {});
  t.glue(Dir::U) = {"z", 2};
  TileType u = make_tile("down", 0, {}, {}, {}, {});
  u.glue(Dir::D) = {"z", 2};
  sys.tileset.tiles = {t, u};
  sys.seed.place({3, -1, 0}, 0);
  normalize_system(sys);
  std::string text = serialize_system(sys);
  TileAssemblySystem back = parse_system(text);
  CHECK(serialize_system(back) == text);
  CHECK(back.dim == Dim::Barely3D);
  CHECK(back.tileset.tiles[0].glue(Dir::U).label == "z");
}

TEST_CASE("duplicate tile names are rejected") {
  std::string text =
      "TAMSET v1\nDIM 2\nTEMP 1\nPALETTE 0=White\n"
      "TILE a COLOR 0 N -|0 E -|0 S -|0 W -|0\n"
      "TILE a COLOR 0 N -|0 E -|0 S -|0 W -|0\n"
      "SEED a 0 0\n";
  CHECK_THROWS_AS(parse_system(text), ValidationError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_system("TAMSET v1\nDIM 7\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("U/D glues rejected in 2D mode") {
  TileAssemblySystem sys;
  sys.tileset.palette = {"White"};
  sys.temperature = 1;
  TileType t = make_tile("t", 0, {}, {}, {}, {});
  t.glue(Dir::U) = {"z", 1};
  sys.tileset.tiles = {t};
  sys.seed.place({0, 0, 0}, 0);
  CHECK_THROWS_AS(normalize_system(sys), ValidationError);
}
