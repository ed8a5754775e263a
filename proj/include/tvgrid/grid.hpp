// Product-indexed point grids, axis faces, partition enumeration, the
// Tverberg partition search, and the transversal / colorful-selection demos.
#pragma once

#include "tvgrid/geometry.hpp"
#include "tvgrid/params.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace tvgrid {

// 1-based coordinates, length m, each in 1..n. Orders lexicographically.
struct GridIndex {
  std::vector<int> coords;
  auto operator<=>(const GridIndex&) const = default;
};

std::string grid_index_key(const GridIndex& index);  // "(1,2)"
GridIndex parse_grid_index_key(const std::string& key);

// The affine map restricted to the vertex grid: one exact point per index.
struct PointGrid {
  Params params;
  std::map<GridIndex, RationalPoint> points;
};

// Throws std::invalid_argument unless the grid is total on [n]^m and every
// point has dimension d.
void validate_grid(const PointGrid& grid);

// All of [n]^m in lexicographic order.
std::vector<GridIndex> all_grid_indices(int n, int m);

// An axis i together with a subset A of [n]; selects the face on the
// vertices whose i-th coordinate lies in A.
struct FaceSelector {
  int axis = 1;
  std::vector<int> subset;  // strictly increasing values in 1..n
};

// The vertex set of the selected face, in lexicographic order; empty subset
// gives the empty set. Throws on an out-of-range axis or subset entry.
std::vector<GridIndex> face_vertices(const FaceSelector& selector, int n,
                                     int m);

// A division of [n] into p parts. Unordered partitions have nonempty parts
// listed by increasing minimum; ordered disjoint unions may have empty parts
// and keep their order.
struct PartitionOfN {
  std::vector<std::vector<int>> parts;
  bool ordered = false;
};

struct PartitionKind {
  bool ordered = false;
  bool allow_empty = false;
};

// Streams partitions in canonical order (restricted-growth strings for the
// unordered case, lexicographic part assignments for the ordered cases).
// The visitor returns false to stop early.
void for_each_partition(int n, int p, PartitionKind kind,
                        const std::function<bool(const PartitionOfN&)>& visit);

std::vector<PartitionOfN> enumerate_partitions(int n, int p,
                                               PartitionKind kind);

// The theorem's conclusion: an axis, an unordered p-partition of [n], the
// vertex lists of the induced faces, and the exact hull witness.
struct TverbergWitness {
  int axis = 0;
  PartitionOfN partition;
  std::vector<std::vector<GridIndex>> part_vertices;
  HullWitness witness;
};

// Scans axes 1..m and unordered nonempty p-partitions in canonical order,
// returning the first (axis, partition) whose induced hulls share a point.
// Deterministic given the input.
std::optional<TverbergWitness> find_tverberg_partition(const PointGrid& grid,
                                                       int p);

// Exact re-certification of a search result against the grid.
bool recertify_witness(const PointGrid& grid, const TverbergWitness& witness);

// The singleton parts of a witness: S = union of parts of size 1. The size
// bound |S| >= 2p - n holds by counting for any nonempty p-partition of [n].
struct ColorfulSelection {
  int axis = 0;
  std::vector<int> selected;
};

ColorfulSelection colorful_helly_extract(const TverbergWitness& witness);

// Line transversal for a 3x3 grid in R^3: runs the p=2 search, names the
// color class by the winning axis (1 = rows, 2 = columns), extracts a line
// through the witness point, and post-verifies it against all three
// triangles of that class.
struct MontejanoResult {
  int axis = 0;
  Line line;
  TverbergWitness witness;
  std::vector<std::vector<RationalPoint>> class_triangles;
};

MontejanoResult montejano_transversal(const PointGrid& grid);

// Deterministic pseudorandom grid with integer coordinates in [-bound,
// bound], reproducible from the seed. bound = 0 puts every point at the
// origin.
PointGrid random_grid(const Params& params, std::uint64_t seed,
                      long long bound);

}  // namespace tvgrid
