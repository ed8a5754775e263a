#include "tvgrid/grid.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tvgrid {

std::string grid_index_key(const GridIndex& index) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < index.coords.size(); ++i) {
    if (i > 0) out << ',';
    out << index.coords[i];
  }
  out << ')';
  return out.str();
}

GridIndex parse_grid_index_key(const std::string& key) {
  if (key.size() < 3 || key.front() != '(' || key.back() != ')') {
    throw std::invalid_argument("malformed grid index key: '" + key + "'");
  }
  GridIndex index;
  std::stringstream body(key.substr(1, key.size() - 2));
  std::string item;
  while (std::getline(body, item, ',')) {
    std::size_t used = 0;
    int value = std::stoi(item, &used);
    if (used != item.size() || value < 1) {
      throw std::invalid_argument("malformed grid index key: '" + key + "'");
    }
    index.coords.push_back(value);
  }
  if (index.coords.empty()) {
    throw std::invalid_argument("malformed grid index key: '" + key + "'");
  }
  return index;
}

void validate_grid(const PointGrid& grid) {
  validate_params(grid.params);
  const auto indices = all_grid_indices(grid.params.n, grid.params.m);
  if (grid.points.size() != indices.size()) {
    throw std::invalid_argument("grid is not total on [n]^m");
  }
  for (const auto& index : indices) {
    auto it = grid.points.find(index);
    if (it == grid.points.end()) {
      throw std::invalid_argument("grid missing index " +
                                  grid_index_key(index));
    }
    if (it->second.size() != static_cast<std::size_t>(grid.params.d)) {
      throw std::invalid_argument("point dimension != d at " +
                                  grid_index_key(index));
    }
  }
}

std::vector<GridIndex> all_grid_indices(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("n, m must be >= 1");
  std::vector<GridIndex> out;
  GridIndex current;
  current.coords.assign(m, 1);
  while (true) {
    out.push_back(current);
    int pos = m - 1;
    while (pos >= 0 && current.coords[pos] == n) {
      current.coords[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++current.coords[pos];
  }
  return out;
}

std::vector<GridIndex> face_vertices(const FaceSelector& selector, int n,
                                     int m) {
  if (selector.axis < 1 || selector.axis > m) {
    throw std::invalid_argument("axis out of range");
  }
  for (int v : selector.subset) {
    if (v < 1 || v > n) throw std::invalid_argument("subset entry out of [n]");
  }
  std::vector<GridIndex> out;
  for (auto& index : all_grid_indices(n, m)) {
    const int coordinate = index.coords[selector.axis - 1];
    if (std::binary_search(selector.subset.begin(), selector.subset.end(),
                           coordinate)) {
      out.push_back(std::move(index));
    }
  }
  return out;
}

namespace {

// Unordered partitions into exactly p nonempty blocks, via restricted-growth
// strings in lexicographic order. Blocks come out ordered by first
// appearance, i.e. by increasing minimum element.
bool visit_rgs(int n, int p, std::vector<int>& rgs, int pos, int current_max,
               const std::function<bool(const PartitionOfN&)>& visit) {
  if (pos == n) {
    if (current_max != p - 1) return true;
    PartitionOfN partition;
    partition.ordered = false;
    partition.parts.assign(p, {});
    for (int i = 0; i < n; ++i) partition.parts[rgs[i]].push_back(i + 1);
    return visit(partition);
  }
  // Remaining positions must still be able to reach p blocks.
  const int remaining = n - pos;
  const int limit = std::min(current_max + 1, p - 1);
  for (int value = 0; value <= limit; ++value) {
    const int new_max = std::max(current_max, value);
    if ((p - 1) - new_max > remaining - 1) continue;
    rgs[pos] = value;
    if (!visit_rgs(n, p, rgs, pos + 1, new_max, visit)) return false;
  }
  return true;
}

// Ordered assignments [n] -> [p] in lexicographic order.
bool visit_assignments(int n, int p, bool require_nonempty,
                       const std::function<bool(const PartitionOfN&)>& visit) {
  std::vector<int> assign(n, 1);
  while (true) {
    bool ok = true;
    if (require_nonempty) {
      std::vector<char> seen(p + 1, 0);
      for (int v : assign) seen[v] = 1;
      for (int j = 1; j <= p; ++j) ok = ok && seen[j];
    }
    if (ok) {
      PartitionOfN partition;
      partition.ordered = true;
      partition.parts.assign(p, {});
      for (int i = 0; i < n; ++i) partition.parts[assign[i] - 1].push_back(i + 1);
      if (!visit(partition)) return false;
    }
    int pos = n - 1;
    while (pos >= 0 && assign[pos] == p) {
      assign[pos] = 1;
      --pos;
    }
    if (pos < 0) return true;
    ++assign[pos];
  }
}

}  // namespace

void for_each_partition(int n, int p, PartitionKind kind,
                        const std::function<bool(const PartitionOfN&)>& visit) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (kind.ordered) {
    visit_assignments(n, p, !kind.allow_empty, visit);
    return;
  }
  if (kind.allow_empty) {
    // At most p nonempty blocks, padded with trailing empty parts.
    for (int k = 1; k <= p; ++k) {
      bool keep_going = true;
      std::vector<int> rgs(n, 0);
      auto pad = [&](const PartitionOfN& partition) {
        PartitionOfN padded = partition;
        padded.parts.resize(p);
        keep_going = visit(padded);
        return keep_going;
      };
      if (k > n) break;
      visit_rgs(n, k, rgs, 0, -1, pad);
      if (!keep_going) return;
    }
    return;
  }
  if (p > n) return;  // no partition into more nonempty parts than elements
  std::vector<int> rgs(n, 0);
  visit_rgs(n, p, rgs, 0, -1, visit);
}

std::vector<PartitionOfN> enumerate_partitions(int n, int p,
                                               PartitionKind kind) {
  std::vector<PartitionOfN> out;
  for_each_partition(n, p, kind, [&](const PartitionOfN& partition) {
    out.push_back(partition);
    return true;
  });
  return out;
}

std::optional<TverbergWitness> find_tverberg_partition(const PointGrid& grid,
                                                       int p) {
  validate_grid(grid);
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  const int n = grid.params.n;
  const int m = grid.params.m;

  std::optional<TverbergWitness> result;
  for (int axis = 1; axis <= m && !result; ++axis) {
    for_each_partition(n, p, PartitionKind{false, false},
                       [&](const PartitionOfN& partition) {
      std::vector<std::vector<GridIndex>> part_vertices;
      std::vector<std::vector<RationalPoint>> hulls;
      for (const auto& part : partition.parts) {
        auto vertices = face_vertices(FaceSelector{axis, part}, n, m);
        std::vector<RationalPoint> hull;
        hull.reserve(vertices.size());
        for (const auto& index : vertices) hull.push_back(grid.points.at(index));
        part_vertices.push_back(std::move(vertices));
        hulls.push_back(std::move(hull));
      }
      auto witness = hulls_common_point(hulls);
      if (witness) {
        result = TverbergWitness{axis, partition, std::move(part_vertices),
                                 std::move(*witness)};
        return false;
      }
      return true;
    });
  }
  return result;
}

bool recertify_witness(const PointGrid& grid, const TverbergWitness& witness) {
  const int n = grid.params.n;
  const int m = grid.params.m;
  if (witness.axis < 1 || witness.axis > m) return false;
  if (witness.partition.parts.empty()) return false;

  // The recorded vertex lists must be exactly the faces the partition names.
  std::vector<char> covered(n + 1, 0);
  std::vector<std::vector<RationalPoint>> hulls;
  for (std::size_t j = 0; j < witness.partition.parts.size(); ++j) {
    const auto& part = witness.partition.parts[j];
    if (part.empty()) return false;
    for (int v : part) {
      if (v < 1 || v > n || covered[v]) return false;
      covered[v] = 1;
    }
    auto expected = face_vertices(FaceSelector{witness.axis, part}, n, m);
    if (j >= witness.part_vertices.size() ||
        witness.part_vertices[j] != expected) {
      return false;
    }
    std::vector<RationalPoint> hull;
    for (const auto& index : expected) hull.push_back(grid.points.at(index));
    hulls.push_back(std::move(hull));
  }
  for (int v = 1; v <= n; ++v) {
    if (!covered[v]) return false;
  }
  return check_hull_witness(hulls, witness.witness);
}

ColorfulSelection colorful_helly_extract(const TverbergWitness& witness) {
  ColorfulSelection selection;
  selection.axis = witness.axis;
  for (const auto& part : witness.partition.parts) {
    if (part.size() == 1) selection.selected.push_back(part[0]);
  }
  std::sort(selection.selected.begin(), selection.selected.end());
  return selection;
}

MontejanoResult montejano_transversal(const PointGrid& grid) {
  validate_grid(grid);
  if (grid.params.d != 3 || grid.params.m != 2 || grid.params.n != 3) {
    throw std::invalid_argument(
        "montejano_transversal requires d=3, m=2, n=3");
  }
  auto witness = find_tverberg_partition(grid, 2);
  if (!witness) {
    // For valid input the p=2 search cannot exhaust: n meets the bound.
    throw std::logic_error(
        "montejano_transversal: no partition found on a valid 3x3 grid");
  }

  // The doubleton part splits into two triangles by the axis coordinate.
  const std::size_t single = witness->partition.parts[0].size() == 1 ? 0 : 1;
  const std::size_t doubles = 1 - single;
  const auto& pair = witness->partition.parts[doubles];
  if (pair.size() != 2) {
    throw std::logic_error("montejano_transversal: unexpected part sizes");
  }

  std::vector<RationalPoint> tri_b, tri_c;
  RationalVector coeff_b, coeff_c;
  const auto& verts = witness->part_vertices[doubles];
  const auto& coeffs = witness->witness.coefficients[doubles];
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const int coordinate = verts[v].coords[witness->axis - 1];
    if (coordinate == pair[0]) {
      tri_b.push_back(grid.points.at(verts[v]));
      coeff_b.push_back(coeffs[v]);
    } else {
      tri_c.push_back(grid.points.at(verts[v]));
      coeff_c.push_back(coeffs[v]);
    }
  }
  Line line = extract_transversal_line(witness->witness.point, tri_b, coeff_b,
                                       tri_c, coeff_c);

  MontejanoResult result;
  result.axis = witness->axis;
  result.line = line;
  for (int j = 1; j <= 3; ++j) {
    auto vertices = face_vertices(FaceSelector{witness->axis, {j}}, 3, 2);
    std::vector<RationalPoint> triangle;
    for (const auto& index : vertices) triangle.push_back(grid.points.at(index));
    if (!line_meets_convex(line, triangle)) {
      throw std::logic_error(
          "montejano_transversal: extracted line misses a class triangle");
    }
    result.class_triangles.push_back(std::move(triangle));
  }
  result.witness = std::move(*witness);
  return result;
}

PointGrid random_grid(const Params& params, std::uint64_t seed,
                      long long bound) {
  validate_params(params);
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  PointGrid grid;
  grid.params = params;
  for (const auto& index : all_grid_indices(params.n, params.m)) {
    RationalPoint point(params.d);
    for (int c = 0; c < params.d; ++c) {
      const long long value =
          static_cast<long long>(rng() % span) - bound;
      point[c] = Rational(value);
    }
    grid.points.emplace(index, std::move(point));
  }
  return grid;
}

}  // namespace tvgrid
