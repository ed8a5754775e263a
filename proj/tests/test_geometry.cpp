#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tvgrid/geometry.hpp"

#include <random>

using namespace tvgrid;

namespace {

RationalPoint pt(std::vector<long long> coords) {
  RationalPoint point;
  for (long long c : coords) point.push_back(Rational(c));
  return point;
}

// Oracle for R^1: hull = interval [min, max]; intersection is nonempty iff
// the largest minimum is at most the smallest maximum.
bool intervals_intersect(const std::vector<std::vector<RationalPoint>>& hulls) {
  Rational lo, hi;
  bool first = true;
  for (const auto& hull : hulls) {
    Rational mn = hull[0][0], mx = hull[0][0];
    for (const auto& point : hull) {
      mn = std::min(mn, point[0]);
      mx = std::max(mx, point[0]);
    }
    if (first) {
      lo = mn;
      hi = mx;
      first = false;
    } else {
      lo = std::max(lo, mn);
      hi = std::min(hi, mx);
    }
  }
  return lo <= hi;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(format_rational(parse_rational("3/4")) == "3/4");
  CHECK(format_rational(parse_rational("-6/8")) == "-3/4");
  CHECK(format_rational(parse_rational("7")) == "7");
  CHECK(parse_rational("2/4") == parse_rational("1/2"));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("lp_feasible on tiny systems") {
  LinearSystem sys;
  sys.num_vars = 2;
  sys.coeffs = {{Rational(1), Rational(1)}};
  sys.rhs = {Rational(1)};
  auto solution = lp_feasible(sys);
  REQUIRE(solution.has_value());
  CHECK((*solution)[0] + (*solution)[1] == 1);
  CHECK((*solution)[0] >= 0);
  CHECK((*solution)[1] >= 0);

  sys.rhs = {Rational(-1)};
  CHECK_FALSE(lp_feasible(sys).has_value());
}

TEST_CASE("lp_feasible interval overlap") {
  // x in [0,2] and x in [1,3]: x = a, a = 1 + b, a + s1 = 2, b + s2 = 2.
  LinearSystem sys;
  sys.num_vars = 4;  // a, b, s1, s2
  sys.coeffs = {
      {Rational(1), Rational(-1), Rational(0), Rational(0)},
      {Rational(1), Rational(0), Rational(1), Rational(0)},
      {Rational(0), Rational(1), Rational(0), Rational(1)},
  };
  sys.rhs = {Rational(1), Rational(2), Rational(2)};
  auto solution = lp_feasible(sys);
  REQUIRE(solution.has_value());
  CHECK((*solution)[0] >= 1);
  CHECK((*solution)[0] <= 2);
}

TEST_CASE("lp_feasible rejects mismatched dimensions") {
  LinearSystem sys;
  sys.num_vars = 2;
  sys.coeffs = {{Rational(1), Rational(1)}};
  sys.rhs = {};
  CHECK_THROWS_AS(lp_feasible(sys), std::invalid_argument);
}

TEST_CASE("hulls_common_point on crossing diagonals") {
  auto witness = hulls_common_point({{pt({0, 0}), pt({2, 2})},
                                     {pt({0, 2}), pt({2, 0})}});
  REQUIRE(witness.has_value());
  CHECK(witness->point == pt({1, 1}));
  CHECK(check_hull_witness({{pt({0, 0}), pt({2, 2})},
                            {pt({0, 2}), pt({2, 0})}},
                           *witness));
}

TEST_CASE("hulls_common_point on distinct singletons") {
  CHECK_FALSE(hulls_common_point({{pt({0, 0})}, {pt({1, 0})}}).has_value());
}

TEST_CASE("hulls_common_point on three intervals") {
  std::vector<std::vector<RationalPoint>> hulls = {
      {pt({0}), pt({2})},
      {pt({1}), pt({3})},
      {pt({-1}), RationalPoint{Rational(3, 2)}}};
  auto witness = hulls_common_point(hulls);
  REQUIRE(witness.has_value());
  CHECK(witness->point[0] >= 1);
  CHECK(witness->point[0] <= Rational(3, 2));
  CHECK(check_hull_witness(hulls, *witness));
}

TEST_CASE("hulls_common_point rejects mixed dimensions") {
  CHECK_THROWS_AS(hulls_common_point({{pt({0, 0})}, {pt({1})}}),
                  std::invalid_argument);
}

TEST_CASE("hulls_common_point agrees with the interval oracle") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    const int hull_count = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<RationalPoint>> hulls;
    for (int h = 0; h < hull_count; ++h) {
      const int size = 1 + static_cast<int>(rng() % 4);
      std::vector<RationalPoint> hull;
      for (int v = 0; v < size; ++v) {
        hull.push_back(pt({static_cast<long long>(rng() % 21) - 10}));
      }
      hulls.push_back(std::move(hull));
    }
    CAPTURE(trial);
    auto witness = hulls_common_point(hulls);
    REQUIRE(witness.has_value() == intervals_intersect(hulls));
    if (witness) REQUIRE(check_hull_witness(hulls, *witness));
  }
}

TEST_CASE("line_meets_convex basics") {
  Line diagonal{pt({0, 0}), {Rational(1), Rational(1)}};
  CHECK(line_meets_convex(diagonal, {pt({1, 0}), pt({0, 1})}));

  Line horizontal{pt({0, 2}), {Rational(1), Rational(0)}};
  CHECK_FALSE(line_meets_convex(horizontal, {pt({0, 0}), pt({1, 0})}));

  Line degenerate{pt({0, 0}), {Rational(0), Rational(0)}};
  CHECK_THROWS_AS(line_meets_convex(degenerate, {pt({1, 1})}),
                  std::invalid_argument);
}

TEST_CASE("a line through two hull points meets the hull") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RationalPoint> hull;
    for (int v = 0; v < 5; ++v) {
      hull.push_back(pt({static_cast<long long>(rng() % 15) - 7,
                         static_cast<long long>(rng() % 15) - 7,
                         static_cast<long long>(rng() % 15) - 7}));
    }
    const auto& a = hull[rng() % hull.size()];
    const auto& b = hull[rng() % hull.size()];
    if (a == b) continue;
    RationalVector direction(3);
    for (int c = 0; c < 3; ++c) direction[c] = b[c] - a[c];
    CAPTURE(trial);
    REQUIRE(line_meets_convex(Line{a, direction}, hull));
  }
}

TEST_CASE("extract_transversal_line through split masses") {
  // alpha = beta = 1/2, u = (0,0,0), v = (2,2,2): line through u and v.
  const RationalPoint x = pt({1, 1, 1});
  Line line = extract_transversal_line(
      x, {pt({0, 0, 0})}, {Rational(1, 2)}, {pt({2, 2, 2})}, {Rational(1, 2)});
  CHECK(line.base == pt({0, 0, 0}));
  CHECK(line.direction == RationalVector{Rational(2), Rational(2), Rational(2)});
  CHECK(line_meets_convex(line, {x}));
}

TEST_CASE("extract_transversal_line with one massless part") {
  // All mass on part c: the line goes through x and a vertex of part b.
  const RationalPoint x = pt({1, 1});
  Line line = extract_transversal_line(x, {pt({5, 0}), pt({6, 0})},
                                       {Rational(0), Rational(0)},
                                       {pt({1, 1})}, {Rational(1)});
  CHECK(line.base == x);
  CHECK(line_meets_convex(line, {pt({5, 0}), pt({6, 0})}));
}

TEST_CASE("extract_transversal_line when everything collapses to x") {
  const RationalPoint x = pt({2, 3});
  Line line = extract_transversal_line(x, {pt({2, 3})}, {Rational(1, 2)},
                                       {pt({2, 3})}, {Rational(1, 2)});
  CHECK(line.base == x);
  CHECK(line.direction == RationalVector{Rational(1), Rational(0)});
}

TEST_CASE("extract_transversal_line validates its witness") {
  CHECK_THROWS_AS(
      extract_transversal_line(pt({0}), {pt({0})}, {Rational(1, 3)},
                               {pt({0})}, {Rational(1, 3)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      extract_transversal_line(pt({5}), {pt({0})}, {Rational(1, 2)},
                               {pt({0})}, {Rational(1, 2)}),
      std::invalid_argument);
}
