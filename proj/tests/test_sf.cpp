#include "doctest.h"
#include "tam/patterns.hpp"
#include "tam/sf.hpp"

using namespace tam;

TEST_CASE("coop_sets enumerates exactly the monotone functions") {
  const auto& table = coop_sets();
  // Independent brute force: count upward-closed 16-bit tables directly.
  int count = 0;
  std::vector<std::uint16_t> oracle;
  for (int t = 0; t < (1 << 16); ++t) {
    bool ok = true;
    for (int v = 0; v < 16 && ok; ++v)
      for (int w = 0; w < 16; ++w)
        if ((v & w) == v && ((t >> v) & 1) > ((t >> w) & 1)) {
          ok = false;
          break;
        }
    if (ok) {
      ++count;
      oracle.push_back(static_cast<std::uint16_t>(t));
    }
  }
  CHECK(count == 168);
  REQUIRE(table.size() == 168);
  for (int i = 0; i < 168; ++i) CHECK(table[i] == oracle[i]);

  CHECK(table[0] == 0);           // constant false first
  CHECK(table[167] == 0xffff);    // constant true last
  // All distinct (sorted strictly ascending).
  for (int i = 1; i < 168; ++i) CHECK(table[i - 1] < table[i]);
}

TEST_CASE("sf_attachable follows the cooperation function") {
  const auto& table = coop_sets();
  int const_true = 167;
  int needs_n = -1, needs_ne = -1;
  for (int i = 0; i < 168; ++i) {
    // "requires N": upward closure of {N}.
    std::uint16_t closure_n = 0, closure_ne = 0;
    for (int v = 0; v < 16; ++v) {
      if (v & dir_bit(Dir::N)) closure_n |= 1 << v;
      if ((v & (dir_bit(Dir::N) | dir_bit(Dir::E))) ==
          (dir_bit(Dir::N) | dir_bit(Dir::E)))
        closure_ne |= 1 << v;
    }
    if (table[i] == closure_n) needs_n = i;
    if (table[i] == closure_ne) needs_ne = i;
  }
  REQUIRE(needs_n >= 0);
  REQUIRE(needs_ne >= 0);

  SFSystem sys;
  SFTile seed;
  seed.labels[0] = seed.labels[1] = seed.labels[2] = seed.labels[3] = 1;
  sys.tiles = {seed};
  sys.seed_index = 0;
  Assembly a;
  a.place({0, 0, 0}, 0);

  SFTile cand = seed;
  // Adjacent with no label matches: match vector 0.
  SFTile blank;
  blank.coop = const_true;
  SFSystem sys2;
  sys2.tiles = {blank};
  Assembly a2;
  a2.place({0, 0, 0}, 0);
  CHECK(sf_match_vector(sys2, a2, {1, 0, 0}, blank) == 0);
  CHECK(sf_attachable(sys2, a2, {1, 0, 0}, blank));  // constant true

  blank.coop = needs_n;
  CHECK(!sf_attachable(sys2, a2, {1, 0, 0}, blank));

  // N and E neighbors matching label 1 give vector {N,E}.
  SFSystem sys3;
  SFTile t;
  t.labels[0] = t.labels[1] = t.labels[2] = t.labels[3] = 1;
  t.coop = needs_ne;
  sys3.tiles = {t};
  Assembly a3;
  a3.place({0, 1, 0}, 0);   // north neighbor
  a3.place({1, 1, 0}, 0);   // bridge for connectivity
  a3.place({1, 0, 0}, 0);   // east neighbor
  int v = sf_match_vector(sys3, a3, {0, 0, 0}, t);
  CHECK(v == (dir_bit(Dir::N) | dir_bit(Dir::E)));
  CHECK(sf_attachable(sys3, a3, {0, 0, 0}, t));
}

TEST_CASE("sf simulation grows a row under a singleton coop set") {
  // Tile whose west side must match: grows east forever from the seed.
  const auto& table = coop_sets();
  std::uint16_t closure_w = 0;
  for (int v = 0; v < 16; ++v)
    if (v & dir_bit(Dir::W)) closure_w |= 1 << v;
  int needs_w = -1;
  for (int i = 0; i < 168; ++i)
    if (table[i] == closure_w) needs_w = i;
  REQUIRE(needs_w >= 0);

  SFSystem sys;
  SFTile t;
  t.labels[static_cast<int>(Dir::E)] = 1;
  t.labels[static_cast<int>(Dir::W)] = 1;
  t.color = kWhite;
  t.coop = needs_w;
  sys.tiles = {t};
  SFSimState st = sf_init(sys);
  for (int i = 0; i < 10; ++i) {
    auto p = sf_add_tile(st);
    REQUIRE(p);
    CHECK(p->loc == Loc{i + 1, 0, 0});
  }
}
