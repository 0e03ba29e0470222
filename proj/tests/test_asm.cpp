#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "squareice/asm_grid.hpp"
#include "squareice/closedform.hpp"

using namespace squareice;

namespace {

GridI grid_from(std::initializer_list<std::initializer_list<int>> rows) {
  GridI m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// The 5x5 example matrix used throughout.
GridI example5() {
  return grid_from({{0, 1, 0, 0, 0},
                    {1, -1, 1, 0, 0},
                    {0, 0, 0, 1, 0},
                    {0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 1}});
}

}  // namespace

TEST_CASE("validation") {
  CHECK(Asm::check(GridI::Identity(3, 3)).empty());
  CHECK(Asm::check(example5()).empty());

  CHECK(Asm::check(grid_from({{1, 0}, {1, -1}})) == "row 2 does not sum to 1");
  CHECK(Asm::check(grid_from({{1, 0}, {1, 0}})) == "column 1 violates the alternating sign rule");
  CHECK(Asm::check(grid_from({{1, 2}, {0, 1}})).find("outside {-1,0,1}") != std::string::npos);
  CHECK(Asm::check(grid_from({{0, 1}, {1, 0}, {0, 0}})) == "matrix is not square");
  CHECK(Asm::check(grid_from({{0, 0}, {1, 1}})).find("row 1") != std::string::npos);
  CHECK_THROWS_AS(Asm(grid_from({{1, 0}, {1, -1}})), std::invalid_argument);
}

TEST_CASE("enumeration counts and determinism") {
  CHECK(count_asms(1) == 1);
  const auto ones = all_asms(1);
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].at(0, 0) == 1);

  CHECK(count_asms(3) == 7);
  CHECK(count_asms(5) == 429);

  // Enumeration is deterministic and duplicate free.
  const auto first = all_asms(4);
  const auto second = all_asms(4);
  REQUIRE(first.size() == second.size());
  std::set<std::string> seen;
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i] == second[i]);
    CHECK(seen.insert(to_text(first[i])).second);
  }
}

TEST_CASE("vertex grid bijection") {
  // Identity 2x2: two c-vertices on the diagonal, none of type 6.
  const auto g2 = to_vertex_grid(Asm(GridI::Identity(2, 2)));
  CHECK(g2.counts[4] == 2);
  CHECK(g2.counts[5] == 0);
  CHECK(g2.counts[4] - g2.counts[5] == 2);

  // The 5x5 example reproduces its line-picture grid.
  const auto g5 = to_vertex_grid(Asm(example5()));
  const GridI expected = grid_from({{1, 5, 3, 3, 3},
                                    {5, 6, 5, 3, 3},
                                    {4, 1, 4, 5, 3},
                                    {4, 5, 2, 2, 3},
                                    {4, 4, 4, 4, 5}});
  CHECK(g5.type == expected);

  // Every size-3 matrix with a -1 has n6 = 1 and n5 = 4; constraints hold for all.
  enumerate_asms(3, [&](const Asm& a) {
    const auto g = to_vertex_grid(a);
    long total = 0;
    for (long c : g.counts) total += c;
    CHECK(total == 9);
    CHECK(g.counts[4] - g.counts[5] == 3);
    if (stats(a).minus_ones == 1) {
      CHECK(g.counts[5] == 1);
      CHECK(g.counts[4] == 4);
    }
  });

  // The constraints persist at size 5.
  enumerate_asms(5, [&](const Asm& a) {
    const auto g = to_vertex_grid(a);
    long total = 0;
    for (long c : g.counts) total += c;
    CHECK(total == 25);
    CHECK(g.counts[4] - g.counts[5] == 5);
  });
}

TEST_CASE("statistics") {
  const auto s3 = stats(Asm(GridI::Identity(3, 3)));
  CHECK(s3.minus_ones == 0);
  CHECK(s3.top_row_col_from_right == 3);
  CHECK(s3.bottom_row_col_from_right == 1);
  CHECK(s3.first_col_row == 1);
  CHECK(s3.last_col_row == 3);

  CHECK(stats(Asm(example5())).minus_ones == 1);

  // The unique size-3 matrix with a -1 has its top 1 centered.
  enumerate_asms(3, [](const Asm& a) {
    if (stats(a).minus_ones == 1) CHECK(stats(a).top_row_col_from_right == 2);
  });

  // Distribution of top positions over all size-3 matrices: (2, 3, 2).
  std::map<int, int> hist;
  enumerate_asms(3, [&](const Asm& a) { ++hist[stats(a).top_row_col_from_right]; });
  CHECK(hist[1] == 2);
  CHECK(hist[2] == 3);
  CHECK(hist[3] == 2);
}

TEST_CASE("closure under symmetries and permutation count") {
  int permutations = 0;
  enumerate_asms(4, [&](const Asm& a) {
    CHECK(Asm::check(a.transposed().entries()).empty());
    CHECK(Asm::check(a.rotated180().entries()).empty());
    if (stats(a).minus_ones == 0) ++permutations;
  });
  CHECK(permutations == 24);  // 4!
}

TEST_CASE("text and json formats") {
  const Asm a(example5());
  CHECK(asm_from_text(to_text(a)) == a);
  CHECK(asm_from_json(to_json(a)) == a);
  CHECK(to_text(Asm(GridI::Identity(2, 2))) == "1 0\n0 1\n");
  CHECK(to_json(Asm(GridI::Identity(2, 2))) == "[[1,0],[0,1]]");
  CHECK_THROWS_AS(asm_from_text("1 0\n1 x\n"), std::invalid_argument);
  CHECK_THROWS_AS(asm_from_text(""), std::invalid_argument);
  CHECK_THROWS_AS(asm_from_json("[[1,0],[1]]"), std::invalid_argument);
}
