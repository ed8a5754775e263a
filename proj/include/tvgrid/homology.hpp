// Reduced simplicial homology over Q and prime fields: face tables,
// boundary matrices, exact rank computation, and connectivity reports.
#pragma once

#include "tvgrid/complexes.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tvgrid {

struct Field {
  bool rational = true;
  std::uint32_t prime = 0;

  static Field Q() { return Field{true, 0}; }
  static Field GF(std::uint32_t q) { return Field{false, q}; }
  std::string name() const;
  bool operator==(const Field&) const = default;
};

// faces[k] holds the sorted k-dimensional faces (vertex lists of size k+1);
// the empty face of the augmented complex is implicit in degree -1.
struct FaceTable {
  std::vector<std::vector<std::vector<int>>> faces;

  long long count(int degree) const {
    return degree >= 0 && degree < static_cast<int>(faces.size())
               ? static_cast<long long>(faces[degree].size())
               : 0;
  }
};

// All faces of dimension <= up_to, deduplicated and sorted per degree.
FaceTable faces_by_degree(const SimplicialComplex& complex, int up_to,
                          const Caps& caps = Caps::defaults());

// Sparse integer matrix in triplet form; entries are boundary signs.
struct SparseMatrix {
  long long rows = 0;
  long long cols = 0;
  std::vector<std::tuple<int, int, int>> entries;  // (row, col, value)
};

// The boundary map from degree-k chains to degree-(k-1) chains; degree 0
// gives the augmentation row onto the empty face.
SparseMatrix boundary_matrix(const FaceTable& table, int degree);

// Exact rank over Q by fraction-free (Bareiss) elimination; falls back from
// 64-bit to arbitrary precision if intermediate values grow too large.
long long rank_over_Q(const SparseMatrix& matrix,
                      const Caps& caps = Caps::defaults());
long long rank_mod_prime(const SparseMatrix& matrix, std::uint32_t prime,
                         const Caps& caps = Caps::defaults());
long long matrix_rank(const SparseMatrix& matrix, const Field& field,
                      const Caps& caps = Caps::defaults());

struct HomologyReport {
  Field field;
  int up_to = -1;                 // highest degree with a computed number
  std::vector<long long> betti;   // reduced Betti numbers, degrees 0..up_to
  bool empty_complex = false;     // reduced H_{-1} is 1-dimensional
  // Largest degree c with betti[0..c] all zero; -1 when betti[0] != 0,
  // -2 for the empty complex.
  int connectivity = -2;
};

HomologyReport reduced_betti(const SimplicialComplex& complex, int up_to,
                             const Field& field,
                             const Caps& caps = Caps::defaults());

// Vanishing of all reduced Betti numbers through `target` over every
// requested field. A negative target is vacuously true. Numbers are
// computed through target+1 to expose off-by-one errors; any disagreement
// between fields is flagged, never suppressed.
struct ConnectivityCheck {
  int target = 0;
  bool pass = false;
  bool vacuous = false;
  bool field_disagreement = false;
  std::vector<HomologyReport> reports;
};

ConnectivityCheck homological_connectivity(const SimplicialComplex& complex,
                                           int target,
                                           const std::vector<Field>& fields,
                                           const Caps& caps = Caps::defaults());

}  // namespace tvgrid
