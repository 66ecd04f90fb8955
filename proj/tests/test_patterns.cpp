#include "doctest.h"
#include "tam/patterns.hpp"
#include "tam/sim.hpp"

using namespace tam;

TEST_CASE("single_pixel basics") {
  Pattern p = single_pixel(16, 10, 2);
  CHECK(p.width == 16);
  CHECK(p.at(10, 2) == kBlack);
  CHECK(p.count(kBlack) == 1);
  CHECK(p.count(kWhite) == 255);

  Pattern one = single_pixel(1, 0, 0);
  CHECK(one.count(kBlack) == 1);

  Pattern c = single_pixel(3, 1, 1);
  CHECK(c.at(1, 1) == kBlack);
  CHECK(c.count(kWhite) == 8);

  CHECK_THROWS_AS(single_pixel(4, 4, 0), OutOfRange);
}

TEST_CASE("multi_pixel separation") {
  Pattern p = multi_pixel(16, {{2, 2}, {10, 2}, {2, 12}});
  CHECK(p.count(kBlack) == 3);
  CHECK(p.at(2, 2) == kBlack);
  CHECK(p.at(10, 2) == kBlack);
  CHECK(p.at(2, 12) == kBlack);

  CHECK(multi_pixel(16, {{5, 5}}) == single_pixel(16, 5, 5));
  CHECK_THROWS_AS(multi_pixel(16, {{0, 0}, {1, 1}}), SeparationViolation);
}

TEST_CASE("stripes by definition") {
  // Independent evaluation of the definition over all cells.
  auto oracle = [](int n, int i, int j) {
    int black = 0;
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x)
        if (x % i == 0 || y % j == 0) ++black;
    return black;
  };
  Pattern p = stripes(6, 2, 3);
  for (int x : {0, 2, 4})
    for (int y = 0; y < 6; ++y) CHECK(p.at(x, y) == kBlack);
  for (int y : {0, 3})
    for (int x = 0; x < 6; ++x) CHECK(p.at(x, y) == kBlack);
  CHECK(p.count(kBlack) == oracle(6, 2, 3));
  CHECK(p.count(kBlack) == 24);

  CHECK(stripes(4, 1, 1).count(kBlack) == 16);

  Pattern q = stripes(4, 3, 3);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) {
      bool black = (x % 3 == 0) || (y % 3 == 0);
      CHECK((q.at(x, y) == kBlack) == black);
    }
}

TEST_CASE("stripes transpose identity") {
  CHECK(stripes(16, 3, 5).transpose() == stripes(16, 5, 3));
  CHECK(stripes(9, 2, 4).transpose() == stripes(9, 4, 2));
}

TEST_CASE("grid_repeat") {
  Pattern p = single_pixel(4, 1, 2);
  Pattern g = grid_repeat(p, 3);
  CHECK(g.width == 12);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(g.at(1 + 4 * a, 2 + 4 * b) == kBlack);
  CHECK(g.count(kBlack) == 9);

  CHECK(grid_repeat(p, 1) == p);

  Pattern two = Pattern::filled(2, 2, kWhite);
  two.at(0, 1) = kBlack;
  Pattern four = grid_repeat(two, 2);
  CHECK(four.width == 4);
  CHECK(four.count(kBlack) == 4);

  // Composition law.
  CHECK(grid_repeat(grid_repeat(two, 2), 3) == grid_repeat(two, 6));
}

TEST_CASE("assembly_pattern extraction") {
  TileAssemblySystem sys;
  sys.tileset.palette = default_palette();
  sys.temperature = 1;
  TileType w;
  w.name = "w";
  w.color = kWhite;
  TileType b;
  b.name = "b";
  b.color = kBlack;
  sys.tileset.tiles = {w, b};
  sys.seed.place({5, 5, 0}, 1);
  normalize_system(sys);

  SUBCASE("single tile") {
    auto r = assembly_pattern(sys, sys.seed);
    REQUIRE(std::holds_alternative<Pattern>(r));
    Pattern p = std::get<Pattern>(r);
    CHECK(p.width == 1);
    CHECK(p.at(0, 0) == kBlack);
  }

  SUBCASE("L-shape is not rectangular") {
    Assembly a;
    a.place({0, 0, 0}, 0);
    a.place({1, 0, 0}, 0);
    a.place({0, 1, 0}, 0);
    auto r = assembly_pattern(sys, a);
    REQUIRE(std::holds_alternative<NotRectangular>(r));
    CHECK(std::get<NotRectangular>(r).first_hole == Loc{1, 1, 0});
  }

  SUBCASE("translation normalization") {
    Assembly a;
    a.place({7, -3, 0}, 1);
    a.place({8, -3, 0}, 0);
    auto r = assembly_pattern(sys, a);
    REQUIRE(std::holds_alternative<Pattern>(r));
    Pattern p = std::get<Pattern>(r);
    CHECK(p.width == 2);
    CHECK(p.height == 1);
    CHECK(p.at(0, 0) == kBlack);
    CHECK(p.at(1, 0) == kWhite);
  }
}

TEST_CASE("pattern codec round trip") {
  Pattern p = Pattern::filled(1, 1, kWhite);
  std::string text = serialize_pattern(p);
  CHECK(text == "PAT v1\nSIZE 1 1\nPALETTE 0=White 1=Black 2=Red 3=Green "
                "4=Aqua 5=Blue 6=Yellow 7=Fuchsia\nROW 0\n");
  CHECK(parse_pattern(text) == p);

  Pattern s = stripes(6, 2, 3);
  std::string st = serialize_pattern(s);
  CHECK(serialize_pattern(parse_pattern(st)) == st);

  CHECK_THROWS_AS(parse_pattern("PAT v1\nSIZE 2 2\nPALETTE 0=W\nROW 0 0 0\n"),
                  ParseError);
}

TEST_CASE("ppm export") {
  Pattern p = Pattern::filled(2, 2, kWhite);
  p.at(0, 1) = kBlack;  // northwest corner, first emitted pixel
  std::string ppm = export_ppm(p, default_color_map());
  CHECK(ppm.substr(0, 11) == "P3\n2 2\n255\n");
  CHECK(ppm ==
        "P3\n2 2\n255\n0 0 0\n255 255 255\n255 255 255\n255 255 255\n");
  Pattern q = Pattern::filled(1, 1, 9);
  CHECK_THROWS_AS(export_ppm(q, default_color_map()), MissingColor);
}

TEST_CASE("ceil_log2 and floor_log2") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(16) == 4);
  CHECK(ceil_log2(17) == 5);
  CHECK(floor_log2(1) == 0);
  CHECK(floor_log2(15) == 3);
  CHECK(floor_log2(16) == 4);
}
