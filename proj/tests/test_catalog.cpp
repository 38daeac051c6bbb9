#include "fano/catalog.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using fano::BoundaryCase;
using fano::FanoProblem;
using fano::MultiDegree;
using fano::SearchBounds;

TEST_CASE("multidegree canonicalization and validation") {
  CHECK(MultiDegree({3, 2}).values() == std::vector<int>{2, 3});
  CHECK(MultiDegree({3, 2}) == MultiDegree({2, 3}));
  CHECK(MultiDegree({2, 2, 2}).str() == "2,2,2");
  CHECK_THROWS_AS(MultiDegree(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(MultiDegree({1, 3}), std::invalid_argument);
}

TEST_CASE("fano problem validation and key") {
  CHECK(FanoProblem({2, 2}, 4, 1).key() == "d=2,2;n=4;r=1");
  CHECK_THROWS_AS(FanoProblem({3}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FanoProblem({3}, 3, 0), std::invalid_argument);
}

TEST_CASE("expected dimension") {
  CHECK(fano::expected_dimension(FanoProblem({3}, 3, 1)) == 0);
  CHECK(fano::expected_dimension(FanoProblem({2, 2, 2}, 8, 2)) == 0);
  CHECK(fano::expected_dimension(FanoProblem({3}, 4, 1)) == 2);
}

TEST_CASE("delta minus") {
  CHECK(fano::delta_minus(FanoProblem({2, 2}, 4, 1)) == 0);
  CHECK(fano::delta_minus(FanoProblem({5}, 4, 1)) == 0);   // n-2r-s = 1 > 0 = delta
  CHECK(fano::delta_minus(FanoProblem({3}, 3, 1)) == 0);
  CHECK(fano::delta_minus(FanoProblem({2}, 3, 1)) == 0);   // delta = 1, n-2r-s = 0
  CHECK(fano::delta_minus(FanoProblem({2}, 3, 2)) == -3);  // delta = -3
}

TEST_CASE("solve ambient dimension") {
  CHECK(fano::solve_ambient_dimension(MultiDegree{3}, 1) == 3);
  CHECK_FALSE(fano::solve_ambient_dimension(MultiDegree{3}, 2).has_value());
  CHECK(fano::solve_ambient_dimension(MultiDegree{2, 2, 2}, 2) == 8);
  CHECK(fano::solve_ambient_dimension(MultiDegree{3, 3}, 1) == 5);
}

TEST_CASE("enumeration small window contains the known problems") {
  SearchBounds b;
  b.max_r = 2;
  b.max_d = 9;
  b.max_n = 9;
  auto problems = fano::enumerate_problems(b);
  auto contains = [&](const FanoProblem& p) {
    return std::find(problems.begin(), problems.end(), p) != problems.end();
  };
  CHECK(contains(FanoProblem({3}, 3, 1)));
  CHECK(contains(FanoProblem({5}, 4, 1)));
  CHECK(contains(FanoProblem({2, 2}, 4, 1)));
  CHECK(contains(FanoProblem({2, 2}, 6, 2)));
  CHECK(contains(FanoProblem({4}, 7, 2)));
}

TEST_CASE("enumeration with r <= 1, d <= 3, s <= 2") {
  SearchBounds b;
  b.max_r = 1;
  b.max_d = 3;
  b.max_s = 2;
  auto problems = fano::enumerate_problems(b);
  CHECK(std::find(problems.begin(), problems.end(), FanoProblem({3, 3}, 5, 1)) !=
        problems.end());
}

TEST_CASE("table-1 style search yields exactly twelve problems") {
  SearchBounds b;
  b.require_n_at_most_4r = true;
  b.require_degree_above_two = true;
  auto problems = fano::enumerate_problems(b);
  std::vector<FanoProblem> expected = {
      FanoProblem({2, 3}, 14, 4), FanoProblem({2, 3}, 22, 6), FanoProblem({3}, 3, 1),
      FanoProblem({3}, 8, 3),     FanoProblem({3}, 11, 4),    FanoProblem({3}, 18, 6),
      FanoProblem({3}, 22, 7),    FanoProblem({3}, 31, 9),    FanoProblem({3}, 36, 10),
      FanoProblem({3}, 47, 12),   FanoProblem({4}, 7, 2),     FanoProblem({5}, 4, 1),
  };
  CHECK(problems == expected);
}

TEST_CASE("enumerated problems satisfy delta = 0 and delta_minus >= 0, sorted") {
  SearchBounds b;
  b.max_r = 4;
  b.max_d = 6;
  b.max_s = 4;
  auto problems = fano::enumerate_problems(b);
  CHECK(!problems.empty());
  CHECK(std::is_sorted(problems.begin(), problems.end()));
  CHECK(std::adjacent_find(problems.begin(), problems.end()) == problems.end());
  for (const auto& p : problems) {
    CHECK(fano::expected_dimension(p) == 0);
    CHECK(fano::delta_minus(p) >= 0);
  }
}

TEST_CASE("boundary classification") {
  CHECK(fano::boundary_case(FanoProblem({3}, 3, 1)) == BoundaryCase::cubic_surface);
  CHECK(fano::boundary_case(FanoProblem({2, 2}, 6, 2)) == BoundaryCase::two_quadrics);
  CHECK(fano::boundary_case(FanoProblem({5}, 4, 1)) == BoundaryCase::none);
  CHECK_THROWS_AS(fano::boundary_case(FanoProblem({3}, 4, 1)), std::invalid_argument);
}

TEST_CASE("boundary cases are exactly n - 2r - s = 0, exhaustively") {
  SearchBounds b;  // default window r <= 12, d <= 12
  fano::for_each_problem(b, [](const FanoProblem& p) {
    bool zero = (p.n - 2 * p.r - p.degrees.count()) == 0;
    CHECK((fano::boundary_case(p) != BoundaryCase::none) == zero);
  });
}

TEST_CASE("two-quadric and three-quadric families have the expected shape") {
  SearchBounds b;
  b.max_d = 2;
  b.max_s = 3;
  auto problems = fano::enumerate_problems(b);
  for (const auto& p : problems) {
    if (p.degrees == MultiDegree{2, 2}) {
      CHECK(p.n == 2 * p.r + 2);  // (n, r) = (2k+2, k)
    } else if (p.degrees == MultiDegree{2, 2, 2}) {
      CHECK(p.r % 2 == 0);  // (n, r) = (5k+3, 2k)
      CHECK(p.n == 5 * (p.r / 2) + 3);
    }
  }
  // every k <= 12 appears in the two-quadrics family
  for (int k = 1; k <= 12; ++k) {
    CHECK(std::find(problems.begin(), problems.end(),
                    FanoProblem({2, 2}, 2 * k + 2, k)) != problems.end());
  }
}
