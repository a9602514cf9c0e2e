#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "octacount/grid.hpp"
#include "octacount/plane_partitions.hpp"
#include "octacount/sides.hpp"

using namespace octa;

TEST_CASE("sides validation and tile count") {
  CHECK(tile_count(Sides{1, 1, 1, 1}) == 6);
  CHECK(tile_count(Sides{5, 5, 5, 5}) == 150);
  CHECK(tile_count(Sides{2, 2, 2, 1}) == 18);
  CHECK(tile_count(Sides{2, 2, 2, 2}) == 24);
  CHECK(tile_count(Sides{3, 3, 3, 3}) == 54);

  CHECK(Sides::checked(2, 3, 4, 1) == Sides{2, 3, 4, 1});
  CHECK_THROWS_AS(Sides::checked(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Sides::checked(1, 1, -2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Sides::checked(1, 1, 1, 2'000'000), std::invalid_argument);
}

TEST_CASE("box plane partition counts") {
  CHECK(box_plane_partitions(0, 3, 5) == 1);
  CHECK(box_plane_partitions(1, 1, 1) == 2);
  CHECK(box_plane_partitions(1, 1, 2) == 3);
  CHECK(box_plane_partitions(2, 2, 1) == 6);
  CHECK(box_plane_partitions(2, 2, 2) == 20);
  CHECK(box_plane_partitions(4, 2, 2) == 105);
  CHECK(box_plane_partitions(3, 3, 3) == 980);
  CHECK(box_plane_partitions(4, 4, 4) == 232848);
  // Symmetric in all three arguments.
  CHECK(box_plane_partitions(4, 2, 3) == box_plane_partitions(3, 4, 2));
  CHECK_THROWS_AS(box_plane_partitions(-1, 1, 1), std::invalid_argument);
}

TEST_CASE("x grid border and constraints") {
  const Sides s{2, 3, 4, 1};  // a=2, b=3, c=4, d=1
  VertexGridX x(s, {0, 1, 2});
  CHECK(x.rows() == 3);
  CHECK(x.cols() == 1);
  // Interior.
  CHECK(x.at(1, 1) == 0);
  CHECK(x.at(2, 1) == 1);
  CHECK(x.at(3, 1) == 2);
  // Borders: zero on the low edges, a on the high edges.
  CHECK(x.at(2, 0) == 0);
  CHECK(x.at(0, 1) == 0);
  CHECK(x.at(4, 1) == 2);
  CHECK(x.at(2, 2) == 2);

  CHECK(x.satisfies_constraints());
  CHECK_FALSE(VertexGridX(s, {2, 1, 0}).satisfies_constraints());  // decreasing
  CHECK_FALSE(VertexGridX(s, {0, 1, 3}).satisfies_constraints());  // above a
  CHECK_THROWS_AS(VertexGridX(s, {0, 1}), std::invalid_argument);
}

TEST_CASE("y grid border and constraints") {
  const Sides s{2, 3, 4, 1};
  VertexGridY y(s, {4, 2, 1});
  // Borders: c above and to the right, zero below and to the left.
  CHECK(y.at(0, 1) == 4);
  CHECK(y.at(2, 2) == 4);
  CHECK(y.at(4, 1) == 0);
  CHECK(y.at(2, 0) == 0);

  CHECK(y.satisfies_constraints());  // weakly decreasing along k
  CHECK_FALSE(VertexGridY(s, {1, 2, 4}).satisfies_constraints());  // increasing
  CHECK_FALSE(VertexGridY(s, {5, 2, 1}).satisfies_constraints());  // above c
}

TEST_CASE("x cursor enumerates in lexicographic order") {
  const Sides s{2, 2, 1, 1};  // a=2, interior is a 2x1 column
  XCursor cur(s);
  std::vector<std::vector<int>> seen;
  do {
    const auto& g = cur.grid();
    seen.push_back({g.at(1, 1), g.at(2, 1)});
    CHECK(g.satisfies_constraints());
  } while (cur.advance());
  const std::vector<std::vector<int>> expected = {
      {0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  CHECK(seen == expected);
  CHECK(count_grids_x(s) == 6);
}

TEST_CASE("y cursor enumerates in lexicographic order") {
  const Sides s{1, 2, 2, 1};  // c=2, interior is a 2x1 column
  YCursor cur(s);
  std::vector<std::vector<int>> seen;
  do {
    const auto& g = cur.grid();
    seen.push_back({g.at(1, 1), g.at(2, 1)});
    CHECK(g.satisfies_constraints());
  } while (cur.advance());
  const std::vector<std::vector<int>> expected = {
      {0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
  CHECK(seen == expected);
  CHECK(count_grids_y(s) == 6);
}

TEST_CASE("cursor stream lengths match the box formula") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int d = 1; d <= 3; ++d) {
        const Sides s{a, b, 2, d};
        XCursor xc(s);
        std::uint64_t n = 1;
        while (xc.advance()) ++n;
        CHECK(BigNat(n) == count_grids_x(s));

        YCursor yc(s);
        std::uint64_t m = 1;
        while (yc.advance()) ++m;
        CHECK(BigNat(m) == count_grids_y(s));
      }
    }
  }
}

TEST_CASE("every y grid from the cursor is admissible and distinct") {
  const Sides s{2, 2, 2, 2};
  YCursor cur(s);
  std::vector<std::string> all;
  do {
    CHECK(cur.grid().satisfies_constraints());
    all.push_back(cur.grid().to_string());
  } while (cur.advance());
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all.size() == 20);
}

TEST_CASE("cursor seek matches stepping") {
  const Sides s{2, 2, 2, 2};
  XCursor stepped(s);
  for (int i = 0; i < 7; ++i) stepped.advance();
  XCursor sought(s);
  sought.seek(7);
  CHECK(sought.grid() == stepped.grid());
  CHECK(sought.rank() == 7);

  // Seeking backwards restarts from the first grid.
  sought.seek(2);
  XCursor fresh(s);
  fresh.advance();
  fresh.advance();
  CHECK(sought.grid() == fresh.grid());

  CHECK_THROWS_AS(sought.seek(1000), std::out_of_range);
}
