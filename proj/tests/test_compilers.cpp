#include <iostream>

#include "doctest.h"
#include "tam/compilers.hpp"
#include "tam/sim.hpp"

using namespace tam;

namespace {

// Simulates to terminality under PaperOrder plus a few random orders and
// checks the terminal pattern equals the target exactly every time.
void check_compiled(const CompiledSystem& cs, int random_trials = 3) {
  std::uint64_t cap =
      4ull * cs.target.width * cs.target.height + 16;
  CHECK(cs.system.seed.size() == 1);
  CHECK(cs.budget.within());
  for (int trial = 0; trial <= random_trials; ++trial) {
    SimState st = init_state(cs.system);
    auto policy = trial == 0 ? AttachmentPolicy::paper()
                             : AttachmentPolicy::random(1000 + trial);
    auto r = run(st, cap, policy);
    REQUIRE(r.terminal);
    auto pat = assembly_pattern(cs.system, st.assembly);
    REQUIRE(std::holds_alternative<Pattern>(pat));
    CHECK(std::get<Pattern>(pat) == cs.target);
  }
}

}  // namespace

TEST_CASE("compile_single_pixel at paper scale") {
  auto cs = compile_single_pixel(16, 10, 2);
  CHECK(cs.target == single_pixel(16, 10, 2));
  check_compiled(cs);
  // Terminal assembly of the paper-order run is the full 16x16 square.
  SimState st = init_state(cs.system);
  auto r = run(st, 1 << 20, AttachmentPolicy::paper());
  CHECK(r.terminal);
  CHECK(st.assembly.size() == 256);
}

TEST_CASE("compile_single_pixel corner pixel") {
  auto cs = compile_single_pixel(8, 0, 0);
  check_compiled(cs);
}

TEST_CASE("compile_single_pixel assorted positions") {
  for (auto [n, i, j] : {std::tuple<int, int, int>{16, 0, 15},
                         {16, 7, 7},
                         {16, 15, 0},
                         {16, 1, 8},
                         {32, 10, 2},
                         {32, 31, 31},
                         {17, 3, 16},
                         {9, 4, 4}}) {
    CAPTURE(n);
    CAPTURE(i);
    CAPTURE(j);
    auto cs = compile_single_pixel(n, i, j);
    check_compiled(cs, 2);
  }
}

TEST_CASE("compile_single_pixel tiny squares") {
  check_compiled(compile_single_pixel(1, 0, 0));
  check_compiled(compile_single_pixel(2, 1, 0));
  check_compiled(compile_single_pixel(4, 2, 3));
}

TEST_CASE("compile_single_pixel tile counts grow about linearly in log n") {
  // Recorded regression constant: each doubling of n adds at most 48 tiles.
  long long t8 = compile_single_pixel(8, 3, 3).budget.actual;
  long long t16 = compile_single_pixel(16, 6, 6).budget.actual;
  long long t32 = compile_single_pixel(32, 12, 12).budget.actual;
  long long t64 = compile_single_pixel(64, 25, 25).budget.actual;
  CHECK(t16 <= t8 + 48);
  CHECK(t32 <= t16 + 48);
  CHECK(t64 <= t32 + 48);
}

TEST_CASE("compile_square_pattern n=16 arithmetic") {
  // floor(log 16)=4, rib-pair width 9, f=1, r=7 >= 5 (second remainder
  // case), bottom row out to x=14, per-direction family 2n-2 = 30.
  Pattern p = stripes(16, 3, 5);
  auto cs = compile_square_pattern(p);
  CHECK(cs.stats["rib_pair_width"] == 9);
  CHECK(cs.stats["full_rib_pairs"] == 1);
  CHECK(cs.stats["remainder"] == 7);
  CHECK(cs.stats["seed_x"] == 4);
  CHECK(cs.stats["bottom_row_end"] == 14);
  CHECK(cs.stats["east_rib_family"] == 30);
  CHECK(cs.system.temperature == 1);
  check_compiled(cs);
}

TEST_CASE("compile_square_pattern rib family sizes are 2n-2") {
  for (int n : {8, 16, 32}) {
    CAPTURE(n);
    Pattern p = single_pixel(n, n / 2, n / 3);
    auto cs = compile_square_pattern(p);
    CHECK(cs.stats["east_rib_family"] == 2 * n - 2);
    CHECK(cs.stats["west_rib_family"] == 2 * n - 2);
  }
}

TEST_CASE("compile_square_pattern random patterns") {
  SplitMix64 rng(20240817);
  for (int trial = 0; trial < 12; ++trial) {
    Pattern p = Pattern::filled(16, 16, kWhite);
    for (auto& c : p.grid) c = rng.below(2) ? kBlack : kWhite;
    auto cs = compile_square_pattern(p);
    check_compiled(cs, 1);
  }
  for (int n : {2, 3, 5, 7, 9, 12}) {
    CAPTURE(n);
    Pattern p = Pattern::filled(n, n, kWhite);
    for (auto& c : p.grid) c = rng.below(2) ? kBlack : kWhite;
    check_compiled(compile_square_pattern(p), 2);
  }
}

TEST_CASE("compile_square_pattern solid patterns and validation") {
  check_compiled(compile_square_pattern(Pattern::filled(8, 8, kWhite)));
  check_compiled(compile_square_pattern(Pattern::filled(8, 8, kBlack)));
  check_compiled(compile_square_pattern(Pattern::filled(1, 1, kBlack)));
  Pattern bad = Pattern::filled(4, 4, kRed);
  CHECK_THROWS_AS(compile_square_pattern(bad), NotTwoColored);
  Pattern rect = Pattern::filled(4, 3, kWhite);
  CHECK_THROWS_AS(compile_square_pattern(rect), NotSquare);
}

TEST_CASE("compile_square_pattern complexity ratio is bounded") {
  SplitMix64 rng(7);
  for (int n : {8, 16, 32}) {
    CAPTURE(n);
    Pattern p = Pattern::filled(n, n, kWhite);
    for (auto& c : p.grid) c = rng.below(2) ? kBlack : kWhite;
    auto cs = compile_square_pattern(p);
    double ratio = double(cs.budget.actual) /
                   (double(n) * n / std::max(1, ceil_log2(n)));
    CHECK(ratio < 8.0);
  }
}

TEST_CASE("compile_stripes acceptance shapes") {
  for (auto [n, i, j] : {std::tuple<int, int, int>{16, 3, 5},
                         {16, 2, 2},
                         {32, 5, 7},
                         {16, 1, 1}}) {
    CAPTURE(n);
    CAPTURE(i);
    CAPTURE(j);
    auto cs = compile_stripes(n, i, j);
    CHECK(cs.target == stripes(n, i, j));
    CHECK(cs.system.temperature == 2);
    check_compiled(cs, 2);
  }
}

TEST_CASE("compile_stripes varied parameters") {
  for (auto [n, i, j] : {std::tuple<int, int, int>{16, 4, 4},
                         {16, 5, 3},
                         {16, 7, 2},
                         {16, 2, 7},
                         {16, 15, 15},
                         {17, 3, 5},
                         {20, 6, 9},
                         {32, 9, 31},
                         {9, 2, 3},
                         {12, 11, 2},
                         {8, 2, 3},
                         {6, 2, 3},
                         {4, 3, 3},
                         {2, 1, 1},
                         {16, 8, 1},
                         {16, 1, 6}}) {
    CAPTURE(n);
    CAPTURE(i);
    CAPTURE(j);
    auto cs = compile_stripes(n, i, j);
    CHECK(cs.target == stripes(n, i, j));
    check_compiled(cs, 1);
  }
}

TEST_CASE("compile_stripes tile growth per doubling") {
  // Recorded regression constant: at most 64 extra tiles per doubling.
  long long t16 = compile_stripes(16, 3, 5).budget.actual;
  long long t32 = compile_stripes(32, 3, 5).budget.actual;
  long long t64 = compile_stripes(64, 3, 5).budget.actual;
  CHECK(t32 <= t16 + 64);
  CHECK(t64 <= t32 + 64);
}

TEST_CASE("compile_multi_pixel basic cases") {
  auto cs = compile_multi_pixel(16, {{2, 2}, {10, 2}, {2, 12}});
  CHECK(cs.target == multi_pixel(16, {{2, 2}, {10, 2}, {2, 12}}));
  check_compiled(cs);

  auto one = compile_multi_pixel(16, {{5, 5}});
  CHECK(one.target == single_pixel(16, 5, 5));
  check_compiled(one);

  check_compiled(compile_multi_pixel(16, {}));
  check_compiled(compile_multi_pixel(8, {{1, 1}, {6, 6}}));
}

TEST_CASE("compile_multi_pixel assorted layouts") {
  check_compiled(compile_multi_pixel(32, {{0, 0}, {31, 31}, {0, 31}, {31, 0}}));
  check_compiled(compile_multi_pixel(
      32, {{3, 4}, {9, 9}, {15, 14}, {21, 19}}));  // diagonal, sep >= 5
  check_compiled(compile_multi_pixel(16, {{0, 0}, {4, 4}, {8, 8}, {12, 12}}));
  check_compiled(compile_multi_pixel(16, {{15, 0}, {15, 8}, {11, 4}}));
  check_compiled(compile_multi_pixel(17, {{16, 16}, {0, 16}, {16, 0}}));
  check_compiled(compile_multi_pixel(
      16, {{2, 0}, {7, 0}, {12, 0}, {2, 15}, {7, 15}, {12, 15}}));
}

TEST_CASE("compile_multi_pixel budget scales with |L|") {
  std::vector<std::pair<int, int>> locs;
  for (int k = 0; k < 5; ++k) locs.push_back({k * 6, k * 6});
  auto cs = compile_multi_pixel(32, locs);
  CHECK(cs.budget.within());
  check_compiled(cs, 1);
}

TEST_CASE("compile_grid_repeat acceptance shapes") {
  SplitMix64 rng(515151);
  for (int m : {1, 2, 3}) {
    CAPTURE(m);
    Pattern p = Pattern::filled(4, 4, kWhite);
    for (auto& c : p.grid) c = rng.below(2) ? kBlack : kWhite;
    auto cs = compile_grid_repeat(p, m);
    CHECK(cs.target == grid_repeat(p, m));
    CHECK(cs.system.temperature == 2);
    check_compiled(cs, 2);
  }
}

TEST_CASE("compile_grid_repeat named example") {
  Pattern p = single_pixel(4, 1, 2);
  auto cs = compile_grid_repeat(p, 3);
  CHECK(cs.target.width == 12);
  CHECK(cs.target == grid_repeat(p, 3));
  check_compiled(cs);
  CHECK(compile_grid_repeat(p, 1).target == p);
}

TEST_CASE("compile_grid_repeat varied sizes") {
  SplitMix64 rng(99);
  for (auto [n, m] : {std::pair<int, int>{3, 2},
                      {4, 4},
                      {5, 3},
                      {8, 2},
                      {6, 5},
                      {16, 2},
                      {2, 2},
                      {4, 8}}) {
    CAPTURE(n);
    CAPTURE(m);
    Pattern p = Pattern::filled(n, n, kWhite);
    for (auto& c : p.grid) c = rng.below(2) ? kBlack : kWhite;
    auto cs = compile_grid_repeat(p, m);
    CHECK(cs.target == grid_repeat(p, m));
    check_compiled(cs, 1);
  }
  // Small-instance fallback path.
  Pattern tiny = Pattern::filled(2, 2, kWhite);
  tiny.at(0, 0) = kBlack;
  auto cs = compile_grid_repeat(tiny, 3);
  CHECK(cs.target == grid_repeat(tiny, 3));
  CHECK(cs.system.seed.size() == 1);
  SimState st = init_state(cs.system);
  auto r = run(st, 1 << 16, AttachmentPolicy::paper());
  CHECK(r.terminal);
  auto pt = assembly_pattern(cs.system, st.assembly);
  REQUIRE(std::holds_alternative<Pattern>(pt));
  CHECK(std::get<Pattern>(pt) == cs.target);
}

TEST_CASE("compile_grid_repeat tile count constant in m") {
  Pattern p = Pattern::filled(4, 4, kWhite);
  p.at(1, 2) = kBlack;
  p.at(3, 0) = kBlack;
  long long t2 = compile_grid_repeat(p, 2).budget.actual;
  long long t3 = compile_grid_repeat(p, 3).budget.actual;
  long long t4 = compile_grid_repeat(p, 4).budget.actual;
  // Constant in m up to the count-width (log nm) term.
  CHECK(std::abs(t3 - t2) <= 40);
  CHECK(std::abs(t4 - t3) <= 40);
}
