// Abstract simplicial complexes stored by facet lists, the configuration
// complex and its nerve, the subcomplexes M and L_i, joins, barycentric
// subdivision, cyclic group actions, and the structural verifiers.
#pragma once

#include "tvgrid/grid.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvgrid {

// Size guards for the exponential constructions. Overridable per call and,
// for the defaults, via TVGRID_MAX_VERTICES / TVGRID_MAX_FACES /
// TVGRID_MAX_MATRIX_ENTRIES.
struct Caps {
  long long max_vertices = 1000;
  long long max_faces = 1000000;
  long long max_matrix_entries = 4000000;
  static Caps defaults();
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Abstract complex over dense integer vertex ids with a label table.
// Facets are sorted id lists, globally sorted, deduplicated, and checked to
// form an antichain. A set is a face iff it is a subset of some facet.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::vector<std::string> labels,
                    std::vector<std::vector<int>> facets);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  int dimension() const;  // -1 when there are no facets
  bool is_face(std::vector<int> face) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> facets_;
};

// Returns true when the two complexes have identical facet lists and vertex
// counts (labels ignored).
bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b);

// An ordered tuple of pairwise-disjoint subsets of [n]; parts may be empty.
using PartsTuple = std::vector<std::vector<int>>;

std::string parts_tuple_label(const PartsTuple& parts);

// Names a facet of the configuration complex: an axis plus a disjoint union
// covering [n]. Descriptors whose parts are all empty or full name the same
// vertex set on every axis; canonical form pins those to axis 1.
struct FacetDescriptor {
  int axis = 1;
  PartsTuple parts;

  void canonicalize(int n);
  std::string label() const;
  auto operator<=>(const FacetDescriptor&) const = default;
};

// A vertex of the configuration complex: one of p grid copies.
struct KVertex {
  int part = 1;  // 1..p
  GridIndex index;
};

// Cyclic vertex permutation attached to a complex.
struct PermutationAction {
  std::vector<int> generator;  // vertex id -> vertex id
  int order = 1;

  std::vector<int> apply(const std::vector<int>& face) const;
  std::vector<int> power(int exponent) const;  // generator^exponent
};

PermutationAction identity_action(std::size_t vertex_count, int order);

// Checks the generator is a bijection of the right order and maps every
// facet to a facet.
bool action_is_invariant(const SimplicialComplex& complex,
                         const PermutationAction& action);

struct FreenessReport {
  bool free = false;  // no nonidentity power fixes a vertex
  std::map<long long, long long> vertex_orbit_histogram;
  std::map<long long, long long> facet_orbit_histogram;
};

FreenessReport check_action_free(const SimplicialComplex& complex,
                                 const PermutationAction& action);

// The (n^m - 1)-simplex on the vertex set [n]^m: a single facet.
SimplicialComplex product_simplex(int n, int m,
                                  const Caps& caps = Caps::defaults());

// The p-fold pairwise deleted join of the (n-1)-simplex: vertex set
// [n] x [p], one facet per ordered disjoint union covering [n].
struct DeletedJoin {
  SimplicialComplex complex;
  std::vector<PartsTuple> facet_tuples;
  int n = 0, p = 0;
};

DeletedJoin deleted_join_pairwise(int n, int p,
                                  const Caps& caps = Caps::defaults());

// The configuration complex on p disjoint copies of [n]^m, facets indexed
// by deduplicated facet descriptors, with the cyclic part-shift action.
struct ConfigComplex {
  SimplicialComplex complex;
  PermutationAction action;
  std::vector<FacetDescriptor> facet_descriptors;  // aligned with facets()
  int n = 0, m = 0, p = 0;

  int vertex_id(int part, const GridIndex& index) const;
  KVertex vertex_of_id(int id) const;
  // Membership of a K-vertex in the facet a descriptor names.
  static bool descriptor_contains(const FacetDescriptor& descriptor,
                                  const KVertex& vertex);
};

ConfigComplex config_complex_K(int n, int m, int p,
                               const Caps& caps = Caps::defaults());

// Nerve of the facet family of a complex: vertex i is facet i of the input;
// facets of the nerve are the maximal vertex-dual sets.
struct NerveComplex {
  SimplicialComplex complex;
};

NerveComplex nerve_of_facets(const SimplicialComplex& base,
                             const Caps& caps = Caps::defaults(),
                             const std::vector<std::string>& vertex_labels = {});

// Induced subcomplex of the nerve of K on the axis-1 descriptors over all
// disjoint unions. Facet tags record the (element j, part k) pair whose
// dual set the facet is.
struct MComplex {
  SimplicialComplex complex;
  PermutationAction action;
  std::vector<PartsTuple> vertex_tuples;           // aligned with vertex ids
  std::vector<std::pair<int, int>> facet_tags;     // aligned with facets()
  int n = 0, m = 0, p = 0;
};

MComplex subcomplex_M(int n, int m, int p, const Caps& caps = Caps::defaults());

// The subcomplex on axis-i descriptors with all parts nonempty (ordered
// partitions); faces are given directly by the coordinatewise-intersection
// rule, not induced. Facet tags record the ordered tuple (j_1, ..., j_p).
struct LComplex {
  SimplicialComplex complex;
  PermutationAction action;
  std::vector<PartsTuple> vertex_tuples;
  std::vector<std::vector<int>> facet_tuples;
  int axis = 0, n = 0, m = 0, p = 0;
};

LComplex subcomplex_L(int axis, int n, int p, int m,
                      const Caps& caps = Caps::defaults());

// The abstract complex on ordered partitions of [n] into p nonempty parts;
// isomorphic to every L_i by relabeling.
struct CComplex {
  SimplicialComplex complex;
  std::vector<PartsTuple> vertex_tuples;
  std::vector<std::vector<int>> facet_tuples;
  int n = 0, p = 0;
};

CComplex complex_C(int n, int p, const Caps& caps = Caps::defaults());

// Join of complexes with pairwise-disjoint label sets. Empty factors are
// identity elements; facet_sources records the contributing facet per
// factor.
struct JoinComplex {
  SimplicialComplex complex;
  std::vector<int> vertex_offsets;               // one per factor
  std::vector<std::vector<int>> facet_sources;   // aligned with facets()
};

JoinComplex join_complexes(const std::vector<const SimplicialComplex*>& factors,
                           const Caps& caps = Caps::defaults());

// T = M * L_2 * ... * L_m with the induced cyclic action (T = M when m = 1).
struct TComplex {
  JoinComplex join;
  MComplex m_part;
  std::vector<LComplex> l_parts;
  PermutationAction action;
  int n = 0, m = 0, p = 0;
};

TComplex complex_T(int n, int m, int p, const Caps& caps = Caps::defaults());

// Barycentric subdivision: vertices are the nonempty faces, facets the
// maximal chains.
struct SdComplex {
  SimplicialComplex complex;
  std::vector<std::vector<int>> vertex_faces;  // sd vertex id -> base face
};

SdComplex barycentric_subdivision(const SimplicialComplex& base,
                                  const Caps& caps = Caps::defaults());

// Induced actions on derived complexes. Each verifies invariance on the
// derived complex and throws std::runtime_error if the action does not
// descend.
PermutationAction induce_on_nerve(const SimplicialComplex& base,
                                  const PermutationAction& action,
                                  const NerveComplex& nerve);
PermutationAction induce_on_sd(const PermutationAction& action,
                               const SdComplex& sd);
PermutationAction induce_on_join(const std::vector<const PermutationAction*>& actions,
                                 const JoinComplex& join);
// base_ids[i] = base vertex id of derived vertex i.
PermutationAction induce_on_vertex_subset(const PermutationAction& action,
                                          const std::vector<int>& base_ids,
                                          const SimplicialComplex& derived);

struct CheckFailure {
  std::string what;
  std::string payload;
};

// Every facet of T carries an explicit witness vertex of K that lies in all
// the K-facets the descriptors name; a second, independent check re-derives
// membership of the facet in the nerve.
struct TinNReport {
  bool pass = false;
  long long facets_checked = 0;
  std::vector<std::string> witnesses;  // one label per facet of T
  std::vector<CheckFailure> failures;
};

TinNReport verify_T_in_N(int n, int m, int p,
                         const Caps& caps = Caps::defaults());

struct IsoReport {
  bool pass = false;
  std::string detail;
  std::vector<CheckFailure> failures;
};

// Explicit vertex bijection B -> M (disjoint union -> axis-1 descriptor)
// checked to map faces to faces in both directions.
IsoReport verify_iso_B_M(int n, int m, int p,
                         const Caps& caps = Caps::defaults());
// Explicit vertex bijection C_{n,p} -> L_i by content.
IsoReport verify_iso_C_L(int axis, int n, int p, int m,
                         const Caps& caps = Caps::defaults());

// The simplicial map sd(N) -> sd(K) sending a face of N to the intersection
// of its members: image faces checked nonempty and faces of K, maximal
// chains checked to map to chains, equivariance checked vertexwise.
struct NerveMapReport {
  bool pass = false;
  long long faces_checked = 0;
  long long chains_checked = 0;
  std::vector<CheckFailure> failures;
};

NerveMapReport verify_nerve_map(int n, int m, int p,
                                const Caps& caps = Caps::defaults());

}  // namespace tvgrid
