#include "tvgrid/complexes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tvgrid {

namespace {

long long env_override(const char* name, long long fallback) {
  if (const char* value = std::getenv(name)) {
    const long long parsed = std::atoll(value);
    if (parsed > 0) return parsed;
  }
  return fallback;
}

// base^exp, saturating just above `limit` so callers can compare safely.
long long checked_pow(long long base, int exp, long long limit) {
  long long result = 1;
  for (int i = 0; i < exp; ++i) {
    if (result > limit / base + 1) return limit + 1;
    result *= base;
    if (result > limit) return limit + 1;
  }
  return result;
}

bool is_sorted_subset(const std::vector<int>& small,
                      const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Sorted intersection of two sorted vectors.
std::vector<int> intersect_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Drops duplicates and any set properly contained in another.
std::vector<std::vector<int>> maximal_sets(std::vector<std::vector<int>> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      dominated = i != j && sets[i].size() < sets[j].size() &&
                  is_sorted_subset(sets[i], sets[j]);
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

// All assignments [n] -> [p] in lexicographic order (first position slowest).
std::vector<std::vector<int>> all_assignments(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> assign(n, 1);
  while (true) {
    out.push_back(assign);
    int pos = n - 1;
    while (pos >= 0 && assign[pos] == p) {
      assign[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++assign[pos];
  }
  return out;
}

long long assignment_rank(const std::vector<int>& assign, int p) {
  long long rank = 0;
  for (int value : assign) rank = rank * p + (value - 1);
  return rank;
}

std::vector<int> shift_assignment(const std::vector<int>& assign, int p) {
  std::vector<int> out(assign.size());
  for (std::size_t i = 0; i < assign.size(); ++i) out[i] = assign[i] % p + 1;
  return out;
}

PartsTuple assignment_to_tuple(const std::vector<int>& assign, int p) {
  PartsTuple parts(p);
  for (std::size_t i = 0; i < assign.size(); ++i) {
    parts[assign[i] - 1].push_back(static_cast<int>(i) + 1);
  }
  return parts;
}

bool is_surjective(const std::vector<int>& assign, int p) {
  std::vector<char> seen(p + 1, 0);
  for (int value : assign) seen[value] = 1;
  for (int j = 1; j <= p; ++j) {
    if (!seen[j]) return false;
  }
  return true;
}

bool is_constant(const std::vector<int>& assign) {
  for (int value : assign) {
    if (value != assign[0]) return false;
  }
  return true;
}

// Sorts facets together with per-facet metadata, dropping duplicates.
template <typename Tag>
void sort_facets_with_tags(std::vector<std::vector<int>>& facets,
                           std::vector<Tag>& tags) {
  std::vector<std::size_t> order(facets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return facets[a] < facets[b];
  });
  std::vector<std::vector<int>> sorted_facets;
  std::vector<Tag> sorted_tags;
  for (std::size_t idx : order) {
    if (!sorted_facets.empty() && sorted_facets.back() == facets[idx]) continue;
    sorted_facets.push_back(std::move(facets[idx]));
    sorted_tags.push_back(std::move(tags[idx]));
  }
  facets = std::move(sorted_facets);
  tags = std::move(sorted_tags);
}

std::string join_ints(const std::vector<int>& values, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

}  // namespace

Caps Caps::defaults() {
  Caps caps;
  caps.max_vertices = env_override("TVGRID_MAX_VERTICES", caps.max_vertices);
  caps.max_faces = env_override("TVGRID_MAX_FACES", caps.max_faces);
  caps.max_matrix_entries =
      env_override("TVGRID_MAX_MATRIX_ENTRIES", caps.max_matrix_entries);
  return caps;
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels,
                                     std::vector<std::vector<int>> facets)
    : labels_(std::move(labels)), facets_(std::move(facets)) {
  const int count = static_cast<int>(labels_.size());
  for (auto& facet : facets_) {
    if (facet.empty()) throw std::invalid_argument("empty facet");
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    if (facet.front() < 0 || facet.back() >= count) {
      throw std::invalid_argument("facet vertex id out of range");
    }
  }
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  // Antichain: only facets of strictly smaller size can be contained.
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      if (i == j || facets_[i].size() >= facets_[j].size()) continue;
      if (is_sorted_subset(facets_[i], facets_[j])) {
        throw std::invalid_argument("facet list is not an antichain");
      }
    }
  }
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const auto& facet : facets_) {
    dim = std::max(dim, static_cast<int>(facet.size()) - 1);
  }
  return dim;
}

bool SimplicialComplex::is_face(std::vector<int> face) const {
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  if (face.empty()) return true;
  if (face.front() < 0 ||
      face.back() >= static_cast<int>(labels_.size())) {
    return false;
  }
  for (const auto& facet : facets_) {
    if (is_sorted_subset(face, facet)) return true;
  }
  return false;
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.vertex_count() == b.vertex_count() && a.facets() == b.facets();
}

std::string parts_tuple_label(const PartsTuple& parts) {
  std::ostringstream out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j > 0) out << '|';
    out << '{' << join_ints(parts[j], ',') << '}';
  }
  return out.str();
}

void FacetDescriptor::canonicalize(int n) {
  for (const auto& part : parts) {
    if (!part.empty() && static_cast<int>(part.size()) != n) return;
  }
  axis = 1;  // all parts empty or full: the same vertex set on every axis
}

std::string FacetDescriptor::label() const {
  return "s" + std::to_string(axis) + ":" + parts_tuple_label(parts);
}

std::vector<int> PermutationAction::apply(const std::vector<int>& face) const {
  std::vector<int> out;
  out.reserve(face.size());
  for (int v : face) out.push_back(generator.at(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> PermutationAction::power(int exponent) const {
  std::vector<int> result(generator.size());
  std::iota(result.begin(), result.end(), 0);
  for (int e = 0; e < exponent; ++e) {
    std::vector<int> next(generator.size());
    for (std::size_t v = 0; v < generator.size(); ++v) {
      next[v] = generator[result[v]];
    }
    result = std::move(next);
  }
  return result;
}

PermutationAction identity_action(std::size_t vertex_count, int order) {
  PermutationAction action;
  action.generator.resize(vertex_count);
  std::iota(action.generator.begin(), action.generator.end(), 0);
  action.order = order;
  return action;
}

bool action_is_invariant(const SimplicialComplex& complex,
                         const PermutationAction& action) {
  const std::size_t count = complex.vertex_count();
  if (action.generator.size() != count || action.order < 1) return false;
  std::vector<char> hit(count, 0);
  for (std::size_t v = 0; v < count; ++v) {
    const int image = action.generator[v];
    if (image < 0 || image >= static_cast<int>(count) || hit[image]) {
      return false;
    }
    hit[image] = 1;
  }
  const auto identity = action.power(action.order);
  for (std::size_t v = 0; v < count; ++v) {
    if (identity[v] != static_cast<int>(v)) return false;
  }
  std::set<std::vector<int>> facet_set(complex.facets().begin(),
                                       complex.facets().end());
  for (const auto& facet : complex.facets()) {
    if (!facet_set.count(action.apply(facet))) return false;
  }
  return true;
}

FreenessReport check_action_free(const SimplicialComplex& complex,
                                 const PermutationAction& action) {
  FreenessReport report;
  report.free = true;
  std::vector<char> seen(complex.vertex_count(), 0);
  for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
    if (seen[v]) continue;
    long long size = 0;
    int current = static_cast<int>(v);
    do {
      seen[current] = 1;
      current = action.generator[current];
      ++size;
    } while (current != static_cast<int>(v));
    ++report.vertex_orbit_histogram[size];
    if (size != action.order) report.free = false;
  }
  if (complex.vertex_count() == 0) report.free = false;

  std::map<std::vector<int>, int> facet_index;
  for (std::size_t i = 0; i < complex.facets().size(); ++i) {
    facet_index[complex.facets()[i]] = static_cast<int>(i);
  }
  std::vector<char> facet_seen(complex.facets().size(), 0);
  for (std::size_t i = 0; i < complex.facets().size(); ++i) {
    if (facet_seen[i]) continue;
    long long size = 0;
    int current = static_cast<int>(i);
    do {
      facet_seen[current] = 1;
      current = facet_index.at(action.apply(complex.facets()[current]));
      ++size;
    } while (current != static_cast<int>(i));
    ++report.facet_orbit_histogram[size];
  }
  return report;
}

SimplicialComplex product_simplex(int n, int m, const Caps& caps) {
  if (n < 1 || m < 1) throw std::invalid_argument("n, m must be >= 1");
  const long long count = checked_pow(n, m, caps.max_vertices);
  if (count > caps.max_vertices) {
    throw CapExceeded("product_simplex: n^m exceeds the vertex cap");
  }
  std::vector<std::string> labels;
  std::vector<int> facet(count);
  for (const auto& index : all_grid_indices(n, m)) {
    labels.push_back(grid_index_key(index));
  }
  std::iota(facet.begin(), facet.end(), 0);
  return SimplicialComplex(std::move(labels), {facet});
}

DeletedJoin deleted_join_pairwise(int n, int p, const Caps& caps) {
  if (n < 1 || p < 2) throw std::invalid_argument("need n >= 1, p >= 2");
  if (static_cast<long long>(n) * p > caps.max_vertices) {
    throw CapExceeded("deleted_join_pairwise: n*p exceeds the vertex cap");
  }
  if (checked_pow(p, n, caps.max_faces) > caps.max_faces) {
    throw CapExceeded("deleted_join_pairwise: p^n exceeds the face cap");
  }

  // Vertex (j, part k) has id (k-1)*n + (j-1), matching K(n, 1, p).
  std::vector<std::string> labels;
  for (int k = 1; k <= p; ++k) {
    for (int j = 1; j <= n; ++j) {
      labels.push_back("p" + std::to_string(k) + ":" + std::to_string(j));
    }
  }
  std::vector<std::vector<int>> facets;
  std::vector<PartsTuple> tuples;
  for (const auto& assign : all_assignments(n, p)) {
    std::vector<int> facet(n);
    for (int j = 1; j <= n; ++j) facet[j - 1] = (assign[j - 1] - 1) * n + (j - 1);
    facets.push_back(std::move(facet));
    tuples.push_back(assignment_to_tuple(assign, p));
  }
  sort_facets_with_tags(facets, tuples);

  DeletedJoin result;
  result.n = n;
  result.p = p;
  result.facet_tuples = std::move(tuples);
  result.complex = SimplicialComplex(std::move(labels), std::move(facets));
  return result;
}

int ConfigComplex::vertex_id(int part, const GridIndex& index) const {
  long long rank = 0;
  for (int c : index.coords) rank = rank * n + (c - 1);
  long long vertex_total = 1;
  for (int i = 0; i < m; ++i) vertex_total *= n;
  return static_cast<int>((part - 1) * vertex_total + rank);
}

KVertex ConfigComplex::vertex_of_id(int id) const {
  long long vertex_total = 1;
  for (int i = 0; i < m; ++i) vertex_total *= n;
  KVertex vertex;
  vertex.part = static_cast<int>(id / vertex_total) + 1;
  long long rank = id % vertex_total;
  vertex.index.coords.assign(m, 1);
  for (int i = m - 1; i >= 0; --i) {
    vertex.index.coords[i] = static_cast<int>(rank % n) + 1;
    rank /= n;
  }
  return vertex;
}

bool ConfigComplex::descriptor_contains(const FacetDescriptor& descriptor,
                                        const KVertex& vertex) {
  const auto& part = descriptor.parts.at(vertex.part - 1);
  const int coordinate = vertex.index.coords.at(descriptor.axis - 1);
  return std::binary_search(part.begin(), part.end(), coordinate);
}

ConfigComplex config_complex_K(int n, int m, int p, const Caps& caps) {
  if (n < 1 || m < 1 || p < 2) {
    throw std::invalid_argument("need n, m >= 1 and p >= 2");
  }
  const long long grid_size = checked_pow(n, m, caps.max_vertices);
  if (grid_size * p > caps.max_vertices) {
    throw CapExceeded("config_complex_K: p*n^m exceeds the vertex cap");
  }
  const long long per_axis = checked_pow(p, n, caps.max_faces);
  if (per_axis > caps.max_faces / m) {
    throw CapExceeded("config_complex_K: m*p^n exceeds the face cap");
  }

  ConfigComplex result;
  result.n = n;
  result.m = m;
  result.p = p;

  const auto indices = all_grid_indices(n, m);
  std::vector<std::string> labels;
  labels.reserve(grid_size * p);
  for (int k = 1; k <= p; ++k) {
    for (const auto& index : indices) {
      labels.push_back("p" + std::to_string(k) + ":" + grid_index_key(index));
    }
  }

  // Descriptors axis-major in assignment order; the p constant assignments
  // name the same vertex set on every axis, so they are emitted for axis 1
  // only (canonical form).
  const auto assignments = all_assignments(n, p);
  std::vector<std::vector<int>> facets;
  std::vector<FacetDescriptor> descriptors;
  for (int axis = 1; axis <= m; ++axis) {
    for (const auto& assign : assignments) {
      if (axis > 1 && is_constant(assign)) continue;
      FacetDescriptor descriptor{axis, assignment_to_tuple(assign, p)};
      std::vector<int> facet;
      facet.reserve(grid_size);
      for (int k = 1; k <= p; ++k) {
        for (std::size_t r = 0; r < indices.size(); ++r) {
          if (assign[indices[r].coords[axis - 1] - 1] == k) {
            facet.push_back(static_cast<int>((k - 1) * grid_size + r));
          }
        }
      }
      facets.push_back(std::move(facet));
      descriptors.push_back(std::move(descriptor));
    }
  }
  const std::size_t before = facets.size();
  sort_facets_with_tags(facets, descriptors);
  if (facets.size() != before) {
    throw std::logic_error("config_complex_K: unexpected facet collision");
  }

  result.facet_descriptors = std::move(descriptors);
  result.complex = SimplicialComplex(std::move(labels), std::move(facets));

  result.action.order = p;
  result.action.generator.resize(grid_size * p);
  for (int k = 1; k <= p; ++k) {
    for (long long r = 0; r < grid_size; ++r) {
      result.action.generator[(k - 1) * grid_size + r] =
          static_cast<int>((k % p) * grid_size + r);
    }
  }
  if (!action_is_invariant(result.complex, result.action)) {
    throw std::logic_error("config_complex_K: shift action not invariant");
  }
  return result;
}

NerveComplex nerve_of_facets(const SimplicialComplex& base, const Caps& caps,
                             const std::vector<std::string>& vertex_labels) {
  const long long facet_count = static_cast<long long>(base.facets().size());
  if (facet_count > caps.max_vertices) {
    throw CapExceeded("nerve_of_facets: facet count exceeds the vertex cap");
  }
  if (facet_count * static_cast<long long>(base.vertex_count()) >
      caps.max_faces) {
    throw CapExceeded("nerve_of_facets: dual-set work exceeds the face cap");
  }
  std::vector<std::string> labels;
  if (!vertex_labels.empty()) {
    if (vertex_labels.size() != base.facets().size()) {
      throw std::invalid_argument("nerve label count != facet count");
    }
    labels = vertex_labels;
  } else {
    for (long long i = 0; i < facet_count; ++i) {
      labels.push_back("F" + std::to_string(i));
    }
  }

  std::vector<std::vector<int>> duals;
  for (std::size_t v = 0; v < base.vertex_count(); ++v) {
    std::vector<int> dual;
    for (std::size_t f = 0; f < base.facets().size(); ++f) {
      if (std::binary_search(base.facets()[f].begin(), base.facets()[f].end(),
                             static_cast<int>(v))) {
        dual.push_back(static_cast<int>(f));
      }
    }
    if (!dual.empty()) duals.push_back(std::move(dual));
  }
  NerveComplex nerve;
  nerve.complex = SimplicialComplex(std::move(labels), maximal_sets(duals));
  return nerve;
}

MComplex subcomplex_M(int n, int m, int p, const Caps& caps) {
  if (n < 1 || m < 1 || p < 2) {
    throw std::invalid_argument("need n, m >= 1 and p >= 2");
  }
  const long long vertex_total = checked_pow(p, n, caps.max_vertices);
  if (vertex_total > caps.max_vertices) {
    throw CapExceeded("subcomplex_M: p^n exceeds the vertex cap");
  }
  const long long grid_size = checked_pow(n, m, caps.max_faces);
  if (grid_size > caps.max_faces / vertex_total / p) {
    throw CapExceeded("subcomplex_M: dual-set work exceeds the face cap");
  }

  MComplex result;
  result.n = n;
  result.m = m;
  result.p = p;

  const auto assignments = all_assignments(n, p);
  std::vector<std::string> labels;
  for (const auto& assign : assignments) {
    FacetDescriptor descriptor{1, assignment_to_tuple(assign, p)};
    result.vertex_tuples.push_back(descriptor.parts);
    labels.push_back(descriptor.label());
  }

  // Dual sets of the nerve of K restricted to the axis-1 vertex set: the
  // K-vertex (k, x) lies in descriptor (A_1,...,A_p) iff x_1 is assigned to
  // part k, so its restricted dual set depends only on (x_1, k).
  std::map<std::vector<int>, std::pair<int, int>> dual_rows;
  const auto indices = all_grid_indices(n, m);
  for (int k = 1; k <= p; ++k) {
    for (const auto& index : indices) {
      const int j = index.coords[0];
      std::vector<int> row;
      for (std::size_t a = 0; a < assignments.size(); ++a) {
        if (assignments[a][j - 1] == k) row.push_back(static_cast<int>(a));
      }
      auto [it, inserted] = dual_rows.emplace(std::move(row), std::make_pair(j, k));
      if (!inserted && it->second != std::make_pair(j, k)) {
        throw std::logic_error("subcomplex_M: inconsistent dual-set tags");
      }
    }
  }
  std::vector<std::vector<int>> rows;
  std::vector<std::pair<int, int>> tags;
  for (const auto& [row, tag] : dual_rows) {
    rows.push_back(row);
    tags.push_back(tag);
  }
  // All dual sets have size p^(n-1), so the maximal filter is containment
  // free; keep it anyway so the construction matches the definition.
  const auto maximal = maximal_sets(rows);
  if (maximal.size() != rows.size()) {
    std::vector<std::pair<int, int>> kept;
    for (const auto& facet : maximal) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] == facet) kept.push_back(tags[i]);
      }
    }
    tags = std::move(kept);
  }
  std::vector<std::vector<int>> facets = maximal;
  sort_facets_with_tags(facets, tags);
  result.facet_tags = std::move(tags);
  result.complex = SimplicialComplex(std::move(labels), std::move(facets));

  result.action.order = p;
  result.action.generator.resize(assignments.size());
  for (std::size_t a = 0; a < assignments.size(); ++a) {
    result.action.generator[a] = static_cast<int>(
        assignment_rank(shift_assignment(assignments[a], p), p));
  }
  if (!action_is_invariant(result.complex, result.action)) {
    throw std::logic_error("subcomplex_M: shift action not invariant");
  }
  return result;
}

namespace {

// Shared by subcomplex_L and complex_C: vertices are the surjective
// assignments, facets are indexed by injective p-tuples of [n].
void build_ordered_partition_complex(int n, int p, const Caps& caps,
                                     const std::string& label_prefix,
                                     std::vector<std::string>& labels,
                                     std::vector<PartsTuple>& vertex_tuples,
                                     std::vector<std::vector<int>>& facets,
                                     std::vector<std::vector<int>>& facet_tuples,
                                     std::vector<int>& shift_generator) {
  if (checked_pow(p, n, caps.max_faces) > caps.max_faces) {
    throw CapExceeded("ordered partitions: p^n exceeds the face cap");
  }
  std::vector<std::vector<int>> assignments;
  std::map<std::vector<int>, int> assignment_id;
  for (const auto& assign : all_assignments(n, p)) {
    if (!is_surjective(assign, p)) continue;
    assignment_id[assign] = static_cast<int>(assignments.size());
    assignments.push_back(assign);
  }
  if (static_cast<long long>(assignments.size()) > caps.max_vertices) {
    throw CapExceeded("ordered partitions: vertex count exceeds the cap");
  }
  for (const auto& assign : assignments) {
    const PartsTuple tuple = assignment_to_tuple(assign, p);
    labels.push_back(label_prefix + parts_tuple_label(tuple));
    vertex_tuples.push_back(tuple);
  }

  // One candidate facet per injective tuple (j_1, ..., j_p): the ordered
  // partitions with j_l in A_l for every l.
  std::vector<int> tuple(p, 1);
  std::function<void(int)> recurse = [&](int depth) {
    if (depth == p) {
      std::vector<int> facet;
      for (std::size_t a = 0; a < assignments.size(); ++a) {
        bool match = true;
        for (int l = 0; l < p && match; ++l) {
          match = assignments[a][tuple[l] - 1] == l + 1;
        }
        if (match) facet.push_back(static_cast<int>(a));
      }
      facets.push_back(std::move(facet));
      facet_tuples.push_back(tuple);
      return;
    }
    for (int j = 1; j <= n; ++j) {
      bool used = false;
      for (int l = 0; l < depth; ++l) used = used || tuple[l] == j;
      if (used) continue;
      tuple[depth] = j;
      recurse(depth + 1);
    }
  };
  if (n >= p) recurse(0);
  sort_facets_with_tags(facets, facet_tuples);

  shift_generator.resize(assignments.size());
  for (std::size_t a = 0; a < assignments.size(); ++a) {
    shift_generator[a] = assignment_id.at(shift_assignment(assignments[a], p));
  }
}

}  // namespace

LComplex subcomplex_L(int axis, int n, int p, int m, const Caps& caps) {
  if (axis == 1) {
    throw std::invalid_argument("axis 1 belongs to M, not to any L_i");
  }
  if (axis < 2 || axis > m) throw std::invalid_argument("axis out of 2..m");
  if (n < 1 || p < 2) throw std::invalid_argument("need n >= 1, p >= 2");

  LComplex result;
  result.axis = axis;
  result.n = n;
  result.m = m;
  result.p = p;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> facets;
  std::vector<int> generator;
  build_ordered_partition_complex(n, p, caps,
                                  "s" + std::to_string(axis) + ":", labels,
                                  result.vertex_tuples, facets,
                                  result.facet_tuples, generator);
  result.complex = SimplicialComplex(std::move(labels), std::move(facets));
  result.action.order = p;
  result.action.generator = std::move(generator);
  if (result.complex.vertex_count() > 0 &&
      !action_is_invariant(result.complex, result.action)) {
    throw std::logic_error("subcomplex_L: shift action not invariant");
  }
  return result;
}

CComplex complex_C(int n, int p, const Caps& caps) {
  if (n < 1 || p < 2) throw std::invalid_argument("need n >= 1, p >= 2");
  CComplex result;
  result.n = n;
  result.p = p;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> facets;
  std::vector<int> generator;
  build_ordered_partition_complex(n, p, caps, "", labels,
                                  result.vertex_tuples, facets,
                                  result.facet_tuples, generator);
  result.complex = SimplicialComplex(std::move(labels), std::move(facets));
  return result;
}

JoinComplex join_complexes(const std::vector<const SimplicialComplex*>& factors,
                           const Caps& caps) {
  JoinComplex result;
  std::vector<std::string> labels;
  std::set<std::string> seen_labels;
  std::vector<const SimplicialComplex*> active;
  for (const auto* factor : factors) {
    result.vertex_offsets.push_back(static_cast<int>(labels.size()));
    if (factor->vertex_count() == 0) continue;  // empty factor: identity
    if (factor->facets().empty()) {
      throw std::invalid_argument("join factor has vertices but no facets");
    }
    for (const auto& label : factor->labels()) {
      if (!seen_labels.insert(label).second) {
        throw std::invalid_argument("join factors share the label '" + label +
                                    "'");
      }
      labels.push_back(label);
    }
    active.push_back(factor);
  }
  if (static_cast<long long>(labels.size()) > caps.max_vertices) {
    throw CapExceeded("join: vertex count exceeds the cap");
  }

  long long total = active.empty() ? 0 : 1;
  for (const auto* factor : active) {
    total *= static_cast<long long>(factor->facets().size());
    if (total > caps.max_faces) {
      throw CapExceeded("join: facet product exceeds the face cap");
    }
  }

  // Offsets of the active factors only, aligned with `active`.
  std::vector<int> active_offsets;
  {
    int offset = 0;
    for (const auto* factor : factors) {
      if (factor->vertex_count() > 0) {
        active_offsets.push_back(offset);
        offset += static_cast<int>(factor->vertex_count());
      }
    }
  }

  std::vector<std::vector<int>> facets;
  std::vector<std::vector<int>> sources;
  std::vector<int> choice(active.size(), 0);
  if (!active.empty()) {
    while (true) {
      std::vector<int> facet;
      for (std::size_t f = 0; f < active.size(); ++f) {
        for (int v : active[f]->facets()[choice[f]]) {
          facet.push_back(v + active_offsets[f]);
        }
      }
      facets.push_back(std::move(facet));
      sources.push_back(choice);
      int pos = static_cast<int>(active.size()) - 1;
      while (pos >= 0 &&
             choice[pos] + 1 ==
                 static_cast<int>(active[pos]->facets().size())) {
        choice[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++choice[pos];
    }
  }
  sort_facets_with_tags(facets, sources);
  result.facet_sources = std::move(sources);
  result.complex = SimplicialComplex(std::move(labels), std::move(facets));
  return result;
}

TComplex complex_T(int n, int m, int p, const Caps& caps) {
  TComplex result;
  result.n = n;
  result.m = m;
  result.p = p;
  result.m_part = subcomplex_M(n, m, p, caps);
  std::vector<const SimplicialComplex*> factors = {&result.m_part.complex};
  std::vector<const PermutationAction*> actions = {&result.m_part.action};
  for (int axis = 2; axis <= m; ++axis) {
    result.l_parts.push_back(subcomplex_L(axis, n, p, m, caps));
  }
  for (const auto& l : result.l_parts) {
    factors.push_back(&l.complex);
    actions.push_back(&l.action);
  }
  result.join = join_complexes(factors, caps);
  result.action = induce_on_join(actions, result.join);
  return result;
}

SdComplex barycentric_subdivision(const SimplicialComplex& base,
                                  const Caps& caps) {
  long long budget = 0;
  for (const auto& facet : base.facets()) {
    if (facet.size() > 20) {
      throw CapExceeded("barycentric_subdivision: facet too large");
    }
    budget += (1LL << facet.size()) - 1;
    if (budget > caps.max_faces) {
      throw CapExceeded("barycentric_subdivision: face count exceeds the cap");
    }
  }

  std::set<std::vector<int>> face_set;
  for (const auto& facet : base.facets()) {
    const std::size_t s = facet.size();
    for (std::size_t mask = 1; mask < (1ULL << s); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < s; ++b) {
        if (mask & (1ULL << b)) face.push_back(facet[b]);
      }
      face_set.insert(std::move(face));
    }
  }
  std::vector<std::vector<int>> faces(face_set.begin(), face_set.end());
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::map<std::vector<int>, int> face_id;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    face_id[faces[i]] = static_cast<int>(i);
    labels.push_back("{" + join_ints(faces[i], ',') + "}");
  }
  if (static_cast<long long>(faces.size()) > caps.max_vertices) {
    throw CapExceeded("barycentric_subdivision: vertex count exceeds the cap");
  }

  long long chain_total = 0;
  for (const auto& facet : base.facets()) {
    long long factorial = 1;
    for (std::size_t i = 2; i <= facet.size(); ++i) factorial *= i;
    chain_total += factorial;
    if (chain_total > caps.max_faces) {
      throw CapExceeded("barycentric_subdivision: chain count exceeds the cap");
    }
  }

  // Maximal chains: prefix sets of orderings of each facet.
  std::vector<std::vector<int>> chains;
  for (const auto& facet : base.facets()) {
    std::vector<int> order(facet);
    std::sort(order.begin(), order.end());
    do {
      std::vector<int> chain;
      std::vector<int> prefix;
      for (int v : order) {
        prefix.push_back(v);
        std::vector<int> sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(face_id.at(sorted));
      }
      chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }

  SdComplex result;
  result.vertex_faces = std::move(faces);
  result.complex = SimplicialComplex(std::move(labels), std::move(chains));
  return result;
}

PermutationAction induce_on_nerve(const SimplicialComplex& base,
                                  const PermutationAction& action,
                                  const NerveComplex& nerve) {
  if (nerve.complex.vertex_count() != base.facets().size()) {
    throw std::invalid_argument("nerve does not match the base complex");
  }
  std::map<std::vector<int>, int> facet_index;
  for (std::size_t i = 0; i < base.facets().size(); ++i) {
    facet_index[base.facets()[i]] = static_cast<int>(i);
  }
  PermutationAction induced;
  induced.order = action.order;
  for (const auto& facet : base.facets()) {
    auto it = facet_index.find(action.apply(facet));
    if (it == facet_index.end()) {
      throw std::runtime_error("action does not permute the facets");
    }
    induced.generator.push_back(it->second);
  }
  if (!action_is_invariant(nerve.complex, induced)) {
    throw std::runtime_error("induced nerve action is not invariant");
  }
  return induced;
}

PermutationAction induce_on_sd(const PermutationAction& action,
                               const SdComplex& sd) {
  std::map<std::vector<int>, int> face_id;
  for (std::size_t i = 0; i < sd.vertex_faces.size(); ++i) {
    face_id[sd.vertex_faces[i]] = static_cast<int>(i);
  }
  PermutationAction induced;
  induced.order = action.order;
  for (const auto& face : sd.vertex_faces) {
    auto it = face_id.find(action.apply(face));
    if (it == face_id.end()) {
      throw std::runtime_error("action does not permute the faces");
    }
    induced.generator.push_back(it->second);
  }
  if (!action_is_invariant(sd.complex, induced)) {
    throw std::runtime_error("induced subdivision action is not invariant");
  }
  return induced;
}

PermutationAction induce_on_join(
    const std::vector<const PermutationAction*>& actions,
    const JoinComplex& join) {
  if (actions.size() != join.vertex_offsets.size()) {
    throw std::invalid_argument("one action per join factor required");
  }
  PermutationAction induced;
  induced.order = 1;
  for (const auto* action : actions) {
    induced.order = std::max(induced.order, action->order);
  }
  for (const auto* action : actions) {
    if (action->order != induced.order && !action->generator.empty()) {
      throw std::invalid_argument("join factor actions have mixed orders");
    }
  }
  induced.generator.resize(join.complex.vertex_count());
  for (std::size_t f = 0; f < actions.size(); ++f) {
    const int offset = join.vertex_offsets[f];
    for (std::size_t v = 0; v < actions[f]->generator.size(); ++v) {
      induced.generator[offset + v] = actions[f]->generator[v] + offset;
    }
  }
  if (!action_is_invariant(join.complex, induced)) {
    throw std::runtime_error("induced join action is not invariant");
  }
  return induced;
}

PermutationAction induce_on_vertex_subset(const PermutationAction& action,
                                          const std::vector<int>& base_ids,
                                          const SimplicialComplex& derived) {
  if (base_ids.size() != derived.vertex_count()) {
    throw std::invalid_argument("one base id per derived vertex required");
  }
  std::map<int, int> derived_of_base;
  for (std::size_t i = 0; i < base_ids.size(); ++i) {
    derived_of_base[base_ids[i]] = static_cast<int>(i);
  }
  PermutationAction induced;
  induced.order = action.order;
  for (int base_id : base_ids) {
    auto it = derived_of_base.find(action.generator.at(base_id));
    if (it == derived_of_base.end()) {
      throw std::runtime_error("vertex subset is not action invariant");
    }
    induced.generator.push_back(it->second);
  }
  if (!action_is_invariant(derived, induced)) {
    throw std::runtime_error("induced subset action is not invariant");
  }
  return induced;
}

TinNReport verify_T_in_N(int n, int m, int p, const Caps& caps) {
  if (m < 2) {
    throw std::invalid_argument("verify_T_in_N requires m >= 2");
  }
  const ConfigComplex K = config_complex_K(n, m, p, caps);
  const TComplex T = complex_T(n, m, p, caps);

  std::map<FacetDescriptor, int> k_facet_of_descriptor;
  for (std::size_t i = 0; i < K.facet_descriptors.size(); ++i) {
    k_facet_of_descriptor[K.facet_descriptors[i]] = static_cast<int>(i);
  }

  TinNReport report;
  report.pass = true;
  for (std::size_t f = 0; f < T.join.complex.facets().size(); ++f) {
    ++report.facets_checked;
    const auto& sources = T.join.facet_sources[f];

    // The witness vertex from the construction: x_1 = j from the M facet's
    // tag (j, k), x_i = j_{i,k} from each L_i facet's tuple, in part k.
    const auto [j, k] = T.m_part.facet_tags.at(sources[0]);
    KVertex witness;
    witness.part = k;
    witness.index.coords.assign(m, 0);
    witness.index.coords[0] = j;
    for (int axis = 2; axis <= m; ++axis) {
      const auto& tuple = T.l_parts[axis - 2].facet_tuples.at(sources[axis - 1]);
      witness.index.coords[axis - 1] = tuple[k - 1];
    }
    report.witnesses.push_back("p" + std::to_string(witness.part) + ":" +
                               grid_index_key(witness.index));

    // Collect the member descriptors of this T facet.
    std::vector<FacetDescriptor> members;
    for (int v : T.m_part.complex.facets()[sources[0]]) {
      members.push_back(FacetDescriptor{1, T.m_part.vertex_tuples[v]});
    }
    for (int axis = 2; axis <= m; ++axis) {
      const auto& l = T.l_parts[axis - 2];
      for (int v : l.complex.facets()[sources[axis - 1]]) {
        members.push_back(FacetDescriptor{axis, l.vertex_tuples[v]});
      }
    }

    // Check 1: the witness vertex lies in every named K-facet.
    for (const auto& member : members) {
      if (!ConfigComplex::descriptor_contains(member, witness)) {
        report.pass = false;
        report.failures.push_back(
            {"witness vertex not in member facet",
             member.label() + " misses " + report.witnesses.back()});
      }
    }

    // Check 2 (independent): the member facets intersect as vertex sets of
    // K, i.e. the T facet really is a face of the nerve.
    std::vector<int> common;
    bool first = true;
    for (const auto& member : members) {
      auto it = k_facet_of_descriptor.find(member);
      if (it == k_facet_of_descriptor.end()) {
        report.pass = false;
        report.failures.push_back(
            {"member descriptor is not a facet of K", member.label()});
        first = true;
        break;
      }
      const auto& vertex_set = K.complex.facets()[it->second];
      common = first ? vertex_set : intersect_sorted(common, vertex_set);
      first = false;
    }
    if (!first) {
      if (common.empty()) {
        report.pass = false;
        report.failures.push_back(
            {"T facet is not a face of N",
             "facet " + std::to_string(f) + " has empty common intersection"});
      } else if (!std::binary_search(
                     common.begin(), common.end(),
                     K.vertex_id(witness.part, witness.index))) {
        report.pass = false;
        report.failures.push_back(
            {"witness vertex missing from the common intersection",
             report.witnesses.back()});
      }
    }
  }
  return report;
}

namespace {

IsoReport verify_bijection(const SimplicialComplex& from,
                           const SimplicialComplex& to,
                           const std::vector<int>& map) {
  IsoReport report;
  report.pass = true;
  if (from.vertex_count() != to.vertex_count()) {
    report.pass = false;
    report.failures.push_back({"vertex counts differ",
                               std::to_string(from.vertex_count()) + " vs " +
                                   std::to_string(to.vertex_count())});
    return report;
  }
  std::vector<char> hit(to.vertex_count(), 0);
  for (int image : map) {
    if (image < 0 || image >= static_cast<int>(to.vertex_count()) ||
        hit[image]) {
      report.pass = false;
      report.failures.push_back({"vertex map is not a bijection", ""});
      return report;
    }
    hit[image] = 1;
  }
  std::vector<int> inverse(to.vertex_count());
  for (std::size_t v = 0; v < map.size(); ++v) inverse[map[v]] = static_cast<int>(v);

  for (const auto& facet : from.facets()) {
    std::vector<int> image;
    for (int v : facet) image.push_back(map[v]);
    if (!to.is_face(image)) {
      report.pass = false;
      report.failures.push_back(
          {"facet image is not a face", "{" + join_ints(facet, ',') + "}"});
    }
  }
  for (const auto& facet : to.facets()) {
    std::vector<int> preimage;
    for (int v : facet) preimage.push_back(inverse[v]);
    if (!from.is_face(preimage)) {
      report.pass = false;
      report.failures.push_back({"facet preimage is not a face",
                                 "{" + join_ints(facet, ',') + "}"});
    }
  }
  return report;
}

}  // namespace

IsoReport verify_iso_B_M(int n, int m, int p, const Caps& caps) {
  const DeletedJoin dj = deleted_join_pairwise(n, p, caps);
  std::vector<std::string> labels;
  for (const auto& tuple : dj.facet_tuples) {
    labels.push_back(parts_tuple_label(tuple));
  }
  const NerveComplex B = nerve_of_facets(dj.complex, caps, labels);
  const MComplex M = subcomplex_M(n, m, p, caps);

  std::map<PartsTuple, int> m_vertex_of_tuple;
  for (std::size_t v = 0; v < M.vertex_tuples.size(); ++v) {
    m_vertex_of_tuple[M.vertex_tuples[v]] = static_cast<int>(v);
  }
  std::vector<int> map;
  for (const auto& tuple : dj.facet_tuples) {
    auto it = m_vertex_of_tuple.find(tuple);
    if (it == m_vertex_of_tuple.end()) {
      IsoReport report;
      report.pass = false;
      report.failures.push_back(
          {"disjoint union missing from M", parts_tuple_label(tuple)});
      return report;
    }
    map.push_back(it->second);
  }
  IsoReport report = verify_bijection(B.complex, M.complex, map);
  report.detail = "B(" + std::to_string(n) + "," + std::to_string(p) +
                  ") ~ M with " + std::to_string(B.complex.vertex_count()) +
                  " vertices";
  return report;
}

IsoReport verify_iso_C_L(int axis, int n, int p, int m, const Caps& caps) {
  const CComplex C = complex_C(n, p, caps);
  const LComplex L = subcomplex_L(axis, n, p, m, caps);
  std::map<PartsTuple, int> l_vertex_of_tuple;
  for (std::size_t v = 0; v < L.vertex_tuples.size(); ++v) {
    l_vertex_of_tuple[L.vertex_tuples[v]] = static_cast<int>(v);
  }
  std::vector<int> map;
  for (const auto& tuple : C.vertex_tuples) {
    auto it = l_vertex_of_tuple.find(tuple);
    if (it == l_vertex_of_tuple.end()) {
      IsoReport report;
      report.pass = false;
      report.failures.push_back(
          {"ordered partition missing from L", parts_tuple_label(tuple)});
      return report;
    }
    map.push_back(it->second);
  }
  IsoReport report = verify_bijection(C.complex, L.complex, map);
  report.detail = "C(" + std::to_string(n) + "," + std::to_string(p) +
                  ") ~ L_" + std::to_string(axis) + " with " +
                  std::to_string(C.complex.vertex_count()) + " vertices";
  return report;
}

NerveMapReport verify_nerve_map(int n, int m, int p, const Caps& caps) {
  const ConfigComplex K = config_complex_K(n, m, p, caps);
  std::vector<std::string> nerve_labels;
  for (const auto& descriptor : K.facet_descriptors) {
    nerve_labels.push_back(descriptor.label());
  }
  const NerveComplex N = nerve_of_facets(K.complex, caps, nerve_labels);
  const PermutationAction n_action = induce_on_nerve(K.complex, K.action, N);

  NerveMapReport report;
  report.pass = true;

  // Enumerate the faces of N (the vertices of sd(N)).
  long long budget = 0;
  for (const auto& facet : N.complex.facets()) {
    if (facet.size() > 20) throw CapExceeded("verify_nerve_map: facet too large");
    budget += (1LL << facet.size()) - 1;
    if (budget > caps.max_faces) {
      throw CapExceeded("verify_nerve_map: face enumeration exceeds the cap");
    }
  }
  std::set<std::vector<int>> n_faces;
  for (const auto& facet : N.complex.facets()) {
    const std::size_t s = facet.size();
    for (std::size_t mask = 1; mask < (1ULL << s); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < s; ++b) {
        if (mask & (1ULL << b)) face.push_back(facet[b]);
      }
      n_faces.insert(std::move(face));
    }
  }

  // The vertex map of sd(N) -> sd(K): a face of N maps to the intersection
  // of the K-facets it collects.
  auto image_of = [&](const std::vector<int>& n_face) {
    std::vector<int> common = K.complex.facets()[n_face[0]];
    for (std::size_t i = 1; i < n_face.size(); ++i) {
      common = intersect_sorted(common, K.complex.facets()[n_face[i]]);
    }
    return common;
  };

  for (const auto& face : n_faces) {
    ++report.faces_checked;
    const auto image = image_of(face);
    if (image.empty()) {
      report.pass = false;
      report.failures.push_back(
          {"image of a nerve face is empty", "{" + join_ints(face, ',') + "}"});
      continue;
    }
    if (!K.complex.is_face(image)) {
      report.pass = false;
      report.failures.push_back({"image of a nerve face is not a face of K",
                                 "{" + join_ints(face, ',') + "}"});
    }
    // Equivariance: mapping then shifting equals shifting then mapping.
    const auto shifted_face = n_action.apply(face);
    if (!n_faces.count(shifted_face)) {
      report.pass = false;
      report.failures.push_back({"shifted nerve face is not a face",
                                 "{" + join_ints(shifted_face, ',') + "}"});
      continue;
    }
    if (image_of(shifted_face) != K.action.apply(image)) {
      report.pass = false;
      report.failures.push_back({"nerve map is not equivariant",
                                 "{" + join_ints(face, ',') + "}"});
    }
  }

  // Simpliciality: every maximal chain of sd(N) maps to a chain in the face
  // poset of K. Chains are the prefix families of facet orderings.
  long long chain_total = 0;
  for (const auto& facet : N.complex.facets()) {
    long long factorial = 1;
    for (std::size_t i = 2; i <= facet.size(); ++i) factorial *= i;
    chain_total += factorial;
    if (chain_total > caps.max_faces) {
      throw CapExceeded("verify_nerve_map: chain count exceeds the cap");
    }
  }
  for (const auto& facet : N.complex.facets()) {
    std::vector<int> order(facet);
    std::sort(order.begin(), order.end());
    do {
      ++report.chains_checked;
      std::vector<int> previous;
      bool first = true;
      for (int tau : order) {
        std::vector<int> current =
            first ? K.complex.facets()[tau]
                  : intersect_sorted(previous, K.complex.facets()[tau]);
        if (current.empty() || (!first && !is_sorted_subset(current, previous))) {
          report.pass = false;
          report.failures.push_back(
              {"chain image is not a chain of nonempty faces",
               "{" + join_ints(order, ',') + "}"});
          break;
        }
        previous = std::move(current);
        first = false;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return report;
}

}  // namespace tvgrid
