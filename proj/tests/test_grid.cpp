#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tvgrid/grid.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace tvgrid;

namespace {

PointGrid grid_from_points(
    Params params, const std::vector<std::pair<std::vector<int>, std::vector<long long>>>& entries) {
  PointGrid grid;
  grid.params = params;
  for (const auto& [coords, values] : entries) {
    RationalPoint point;
    for (long long v : values) point.push_back(Rational(v));
    grid.points.emplace(GridIndex{coords}, std::move(point));
  }
  return grid;
}

// Oracle: Stirling numbers of the second kind by recurrence.
long long stirling(int n, int p) {
  if (p == 0) return n == 0 ? 1 : 0;
  if (n == 0 || p > n) return 0;
  std::vector<std::vector<long long>> table(n + 1,
                                            std::vector<long long>(p + 1, 0));
  table[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= std::min(i, p); ++j) {
      table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1];
    }
  }
  return table[n][p];
}

long long factorial(int k) {
  long long out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

long long power(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// The search with the partition list shuffled: used to confirm that a None
// answer reflects exhaustion, not enumeration order.
std::optional<TverbergWitness> shuffled_search(const PointGrid& grid, int p,
                                               std::uint64_t seed) {
  std::vector<std::pair<int, PartitionOfN>> candidates;
  for (int axis = 1; axis <= grid.params.m; ++axis) {
    for (const auto& partition :
         enumerate_partitions(grid.params.n, p, PartitionKind{false, false})) {
      candidates.emplace_back(axis, partition);
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), std::mt19937_64(seed));
  for (const auto& [axis, partition] : candidates) {
    std::vector<std::vector<RationalPoint>> hulls;
    std::vector<std::vector<GridIndex>> part_vertices;
    for (const auto& part : partition.parts) {
      auto vertices =
          face_vertices(FaceSelector{axis, part}, grid.params.n, grid.params.m);
      std::vector<RationalPoint> hull;
      for (const auto& index : vertices) hull.push_back(grid.points.at(index));
      hulls.push_back(std::move(hull));
      part_vertices.push_back(std::move(vertices));
    }
    if (auto witness = hulls_common_point(hulls)) {
      return TverbergWitness{axis, partition, part_vertices, *witness};
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("grid index keys round-trip") {
  GridIndex index{{1, 2, 3}};
  CHECK(grid_index_key(index) == "(1,2,3)");
  CHECK(parse_grid_index_key("(1,2,3)") == index);
  CHECK_THROWS_AS(parse_grid_index_key("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid_index_key("(x)"), std::invalid_argument);
}

TEST_CASE("face_vertices selects slabs") {
  // Full axis: everything.
  CHECK(face_vertices(FaceSelector{1, {1, 2, 3}}, 3, 2).size() == 9);
  // Empty subset: the empty face.
  CHECK(face_vertices(FaceSelector{1, {}}, 3, 2).empty());
  // One column of a 3x3 grid.
  auto column = face_vertices(FaceSelector{2, {2}}, 3, 2);
  REQUIRE(column.size() == 3);
  CHECK(column[0] == GridIndex{{1, 2}});
  CHECK(column[1] == GridIndex{{2, 2}});
  CHECK(column[2] == GridIndex{{3, 2}});
  CHECK_THROWS_AS(face_vertices(FaceSelector{3, {1}}, 3, 2),
                  std::invalid_argument);
}

TEST_CASE("face vertex sets intersect coordinatewise") {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= (n <= 3 ? 4 : 3); ++m) {
      for (int axis = 1; axis <= m; ++axis) {
        for (unsigned a = 0; a < (1u << n); ++a) {
          for (unsigned b = 0; b < (1u << n); ++b) {
            std::vector<int> sa, sb, sab;
            for (int v = 1; v <= n; ++v) {
              if (a & (1u << (v - 1))) sa.push_back(v);
              if (b & (1u << (v - 1))) sb.push_back(v);
              if ((a & b) & (1u << (v - 1))) sab.push_back(v);
            }
            auto va = face_vertices(FaceSelector{axis, sa}, n, m);
            auto vb = face_vertices(FaceSelector{axis, sb}, n, m);
            auto vab = face_vertices(FaceSelector{axis, sab}, n, m);
            std::vector<GridIndex> both;
            std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                                  std::back_inserter(both));
            REQUIRE(both == vab);
            long long expected = sa.size();
            for (int i = 1; i < m; ++i) expected *= n;
            REQUIRE(static_cast<long long>(va.size()) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("partition enumeration matches the stated counts") {
  auto unordered = enumerate_partitions(3, 2, PartitionKind{false, false});
  REQUIRE(unordered.size() == 3);  // S(3,2)
  // Canonical order: restricted-growth strings, parts by increasing minimum.
  CHECK(unordered[0].parts == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(unordered[1].parts == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(unordered[2].parts == std::vector<std::vector<int>>{{1}, {2, 3}});

  CHECK(enumerate_partitions(4, 2, PartitionKind{false, false}).size() == 7);
  CHECK(enumerate_partitions(2, 3, PartitionKind{false, false}).empty());
}

TEST_CASE("partition counts follow the Stirling recurrence") {
  for (int n = 1; n <= 10; ++n) {
    for (int p = 2; p <= n; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      const auto unordered =
          enumerate_partitions(n, p, PartitionKind{false, false});
      REQUIRE(static_cast<long long>(unordered.size()) == stirling(n, p));
      for (const auto& partition : unordered) {
        // Nonempty parts ordered by increasing minimum, covering [n].
        std::set<int> all;
        int last_min = 0;
        for (const auto& part : partition.parts) {
          REQUIRE(!part.empty());
          REQUIRE(part[0] > last_min);
          last_min = part[0];
          all.insert(part.begin(), part.end());
        }
        REQUIRE(static_cast<int>(all.size()) == n);
      }
      if (power(p, n) <= 100000) {
        REQUIRE(static_cast<long long>(
                    enumerate_partitions(n, p, PartitionKind{true, false})
                        .size()) == factorial(p) * stirling(n, p));
        REQUIRE(static_cast<long long>(
                    enumerate_partitions(n, p, PartitionKind{true, true})
                        .size()) == power(p, n));
      }
    }
  }
}

TEST_CASE("search finds the Radon partition of four planar points") {
  auto grid = grid_from_points(Params{2, 1, 2, 4}, {{{1}, {0, 0}},
                                                    {{2}, {4, 0}},
                                                    {{3}, {0, 4}},
                                                    {{4}, {1, 1}}});
  auto witness = find_tverberg_partition(grid, 2);
  REQUIRE(witness.has_value());
  CHECK(witness->axis == 1);
  CHECK(witness->partition.parts ==
        std::vector<std::vector<int>>{{1, 2, 3}, {4}});
  CHECK(witness->witness.point == RationalPoint{Rational(1), Rational(1)});
  CHECK(recertify_witness(grid, *witness));
}

TEST_CASE("the unit square grid has no axis partition") {
  auto grid = grid_from_points(Params{2, 2, 2, 2}, {{{1, 1}, {0, 0}},
                                                    {{1, 2}, {1, 0}},
                                                    {{2, 1}, {0, 1}},
                                                    {{2, 2}, {1, 1}}});
  CHECK_FALSE(find_tverberg_partition(grid, 2).has_value());
  // Exhaustion, not enumeration order: a shuffled scan agrees.
  CHECK_FALSE(shuffled_search(grid, 2, 99).has_value());
  CHECK_FALSE(shuffled_search(grid, 2, 100).has_value());
}

TEST_CASE("random grids at the theorem bound always have a witness") {
  const Params params = make_params(3, 2, 2);
  REQUIRE(params.n == 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointGrid grid = random_grid(params, seed, 10);
    CAPTURE(seed);
    auto witness = find_tverberg_partition(grid, 2);
    REQUIRE(witness.has_value());
    REQUIRE(recertify_witness(grid, *witness));
  }
}

TEST_CASE("colorful selection collects singleton parts") {
  TverbergWitness witness;
  witness.axis = 2;
  witness.partition.parts = {{1}, {2}, {3, 4}};
  auto selection = colorful_helly_extract(witness);
  CHECK(selection.axis == 2);
  CHECK(selection.selected == std::vector<int>{1, 2});

  witness.partition.parts = {{1, 2}, {3, 4}};
  CHECK(colorful_helly_extract(witness).selected.empty());
}

TEST_CASE("montejano transversal on a degenerate grid") {
  // All nine points coincide: any axis works, direction falls back to e1.
  std::vector<std::pair<std::vector<int>, std::vector<long long>>> entries;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) entries.push_back({{i, j}, {5, 5, 5}});
  }
  auto grid = grid_from_points(Params{3, 2, 2, 3}, entries);
  auto result = montejano_transversal(grid);
  CHECK(result.line.base == RationalPoint{Rational(5), Rational(5), Rational(5)});
  CHECK(result.line.direction ==
        RationalVector{Rational(1), Rational(0), Rational(0)});
}

TEST_CASE("montejano transversal on the planar grid") {
  std::vector<std::pair<std::vector<int>, std::vector<long long>>> entries;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) entries.push_back({{i, j}, {i, j, 0}});
  }
  auto grid = grid_from_points(Params{3, 2, 2, 3}, entries);
  auto result = montejano_transversal(grid);
  for (const auto& triangle : result.class_triangles) {
    CHECK(line_meets_convex(result.line, triangle));
  }
}

TEST_CASE("montejano transversal on random grids") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointGrid grid = random_grid(Params{3, 2, 2, 3}, seed, 10);
    CAPTURE(seed);
    auto result = montejano_transversal(grid);
    REQUIRE(result.class_triangles.size() == 3);
    for (const auto& triangle : result.class_triangles) {
      REQUIRE(line_meets_convex(result.line, triangle));
    }
  }
}

TEST_CASE("montejano rejects wrong parameters") {
  auto grid = grid_from_points(Params{2, 2, 2, 2}, {{{1, 1}, {0, 0}},
                                                    {{1, 2}, {1, 0}},
                                                    {{2, 1}, {0, 1}},
                                                    {{2, 2}, {1, 1}}});
  CHECK_THROWS_AS(montejano_transversal(grid), std::invalid_argument);
}

TEST_CASE("random grids are reproducible and seed-sensitive") {
  const Params params{3, 2, 2, 3};
  const PointGrid a = random_grid(params, 1, 10);
  const PointGrid b = random_grid(params, 1, 10);
  const PointGrid c = random_grid(params, 2, 10);
  CHECK(a.points == b.points);
  CHECK(a.points != c.points);
  CHECK(a.points.size() == 9);
  for (const auto& [index, point] : a.points) {
    for (const auto& coordinate : point) {
      CHECK(coordinate >= -10);
      CHECK(coordinate <= 10);
    }
  }
  const PointGrid zeros = random_grid(params, 3, 0);
  for (const auto& [index, point] : zeros.points) {
    for (const auto& coordinate : point) CHECK(coordinate == 0);
  }
}
