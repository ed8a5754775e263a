#include "tvgrid/homology.hpp"

#include "tvgrid/rational.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tvgrid {

std::string Field::name() const {
  return rational ? "Q" : "GF(" + std::to_string(prime) + ")";
}

FaceTable faces_by_degree(const SimplicialComplex& complex, int up_to,
                          const Caps& caps) {
  FaceTable table;
  if (up_to < 0) return table;
  table.faces.resize(up_to + 1);

  long long generated = 0;
  std::vector<std::set<std::vector<int>>> seen(up_to + 1);
  for (const auto& facet : complex.facets()) {
    const int s = static_cast<int>(facet.size());
    const int top = std::min(up_to, s - 1);
    for (int k = 0; k <= top; ++k) {
      // All (k+1)-subsets of the facet.
      std::vector<int> pick(k + 1);
      for (int i = 0; i <= k; ++i) pick[i] = i;
      while (true) {
        std::vector<int> face(k + 1);
        for (int i = 0; i <= k; ++i) face[i] = facet[pick[i]];
        seen[k].insert(std::move(face));
        if (++generated > caps.max_faces) {
          throw CapExceeded("faces_by_degree: enumeration exceeds the cap");
        }
        int pos = k;
        while (pos >= 0 && pick[pos] == s - (k + 1) + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int i = pos + 1; i <= k; ++i) pick[i] = pick[i - 1] + 1;
      }
    }
  }
  for (int k = 0; k <= up_to; ++k) {
    table.faces[k].assign(seen[k].begin(), seen[k].end());
  }
  return table;
}

SparseMatrix boundary_matrix(const FaceTable& table, int degree) {
  SparseMatrix matrix;
  if (degree < 0 || degree >= static_cast<int>(table.faces.size())) {
    return matrix;
  }
  matrix.cols = table.count(degree);
  if (degree == 0) {
    // Augmentation: every vertex maps to the empty face.
    matrix.rows = 1;
    for (int c = 0; c < matrix.cols; ++c) matrix.entries.emplace_back(0, c, 1);
    return matrix;
  }
  matrix.rows = table.count(degree - 1);
  std::map<std::vector<int>, int> row_of;
  for (std::size_t r = 0; r < table.faces[degree - 1].size(); ++r) {
    row_of[table.faces[degree - 1][r]] = static_cast<int>(r);
  }
  for (std::size_t c = 0; c < table.faces[degree].size(); ++c) {
    const auto& face = table.faces[degree][c];
    int sign = 1;
    for (std::size_t drop = 0; drop < face.size(); ++drop) {
      std::vector<int> sub;
      sub.reserve(face.size() - 1);
      for (std::size_t i = 0; i < face.size(); ++i) {
        if (i != drop) sub.push_back(face[i]);
      }
      auto it = row_of.find(sub);
      if (it == row_of.end()) {
        throw std::logic_error("boundary_matrix: sub-face missing from table");
      }
      matrix.entries.emplace_back(it->second, static_cast<int>(c), sign);
      sign = -sign;
    }
  }
  return matrix;
}

namespace {

constexpr long long kOverflowGuard = 1LL << 62;

// Fraction-free elimination on a dense copy; returns nullopt on overflow so
// the caller can redo the computation in arbitrary precision.
std::optional<long long> bareiss_rank_int64(const SparseMatrix& matrix) {
  const long long r = matrix.rows, c = matrix.cols;
  std::vector<std::vector<long long>> dense(r, std::vector<long long>(c, 0));
  for (const auto& [row, col, value] : matrix.entries) dense[row][col] = value;

  const auto magnitude = [](long long v) { return v < 0 ? -v : v; };
  long long rank = 0;
  long long prev = 1;
  std::vector<char> used_row(r, 0);
  for (long long step = 0; step < std::min(r, c); ++step) {
    // Smallest-magnitude pivot keeps the fraction-free values small.
    long long pr = -1, pc = -1;
    for (long long i = 0; i < r; ++i) {
      if (used_row[i]) continue;
      for (long long j = 0; j < c; ++j) {
        if (dense[i][j] != 0 &&
            (pr < 0 || magnitude(dense[i][j]) < magnitude(dense[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    used_row[pr] = 1;
    ++rank;
    const long long pivot = dense[pr][pc];
    for (long long i = 0; i < r; ++i) {
      if (used_row[i]) continue;
      const long long factor = dense[i][pc];
      if (factor == 0 && pivot == prev) continue;
      for (long long j = 0; j < c; ++j) {
        if (j == pc) continue;
        __int128 value = static_cast<__int128>(dense[i][j]) * pivot -
                         static_cast<__int128>(factor) * dense[pr][j];
        value /= prev;  // exact by the Bareiss identity
        if (value > kOverflowGuard || value < -kOverflowGuard) {
          return std::nullopt;
        }
        dense[i][j] = static_cast<long long>(value);
      }
      dense[i][pc] = 0;
    }
    prev = pivot;
  }
  return rank;
}

long long bareiss_rank_bigint(const SparseMatrix& matrix) {
  const long long r = matrix.rows, c = matrix.cols;
  std::vector<std::vector<Integer>> dense(r, std::vector<Integer>(c, 0));
  for (const auto& [row, col, value] : matrix.entries) dense[row][col] = value;

  long long rank = 0;
  Integer prev = 1;
  std::vector<char> used_row(r, 0);
  for (long long step = 0; step < std::min(r, c); ++step) {
    long long pr = -1, pc = -1;
    for (long long i = 0; i < r && pr < 0; ++i) {
      if (used_row[i]) continue;
      for (long long j = 0; j < c; ++j) {
        if (dense[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr < 0) break;
    used_row[pr] = 1;
    ++rank;
    const Integer pivot = dense[pr][pc];
    for (long long i = 0; i < r; ++i) {
      if (used_row[i]) continue;
      const Integer factor = dense[i][pc];
      for (long long j = 0; j < c; ++j) {
        if (j == pc) continue;
        dense[i][j] = (dense[i][j] * pivot - factor * dense[pr][j]) / prev;
      }
      dense[i][pc] = 0;
    }
    prev = pivot;
  }
  return rank;
}

}  // namespace

long long rank_over_Q(const SparseMatrix& matrix, const Caps& caps) {
  if (matrix.rows == 0 || matrix.cols == 0) return 0;
  if (matrix.rows * matrix.cols > caps.max_matrix_entries) {
    throw CapExceeded("rank_over_Q: matrix exceeds the entry cap");
  }
  if (auto rank = bareiss_rank_int64(matrix)) return *rank;
  return bareiss_rank_bigint(matrix);
}

long long rank_mod_prime(const SparseMatrix& matrix, std::uint32_t prime,
                         const Caps& caps) {
  if (prime < 2) throw std::invalid_argument("field characteristic must be >= 2");
  if (matrix.rows == 0 || matrix.cols == 0) return 0;
  if (matrix.rows * matrix.cols > caps.max_matrix_entries) {
    throw CapExceeded("rank_mod_prime: matrix exceeds the entry cap");
  }
  const long long q = prime;
  std::vector<std::vector<long long>> dense(
      matrix.rows, std::vector<long long>(matrix.cols, 0));
  for (const auto& [row, col, value] : matrix.entries) {
    dense[row][col] = ((value % q) + q) % q;
  }
  auto inverse_mod = [&](long long a) {
    long long result = 1, base = a % q, e = q - 2;  // Fermat: q is prime
    while (e > 0) {
      if (e & 1) result = result * base % q;
      base = base * base % q;
      e >>= 1;
    }
    return result;
  };

  long long rank = 0;
  long long row = 0;
  for (long long col = 0; col < matrix.cols && row < matrix.rows; ++col) {
    long long pivot_row = -1;
    for (long long i = row; i < matrix.rows; ++i) {
      if (dense[i][col] != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    std::swap(dense[row], dense[pivot_row]);
    const long long inv = inverse_mod(dense[row][col]);
    for (long long j = col; j < matrix.cols; ++j) {
      dense[row][j] = dense[row][j] * inv % q;
    }
    for (long long i = 0; i < matrix.rows; ++i) {
      if (i == row || dense[i][col] == 0) continue;
      const long long factor = dense[i][col];
      for (long long j = col; j < matrix.cols; ++j) {
        dense[i][j] = ((dense[i][j] - factor * dense[row][j]) % q + q) % q;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

long long matrix_rank(const SparseMatrix& matrix, const Field& field,
                      const Caps& caps) {
  return field.rational ? rank_over_Q(matrix, caps)
                        : rank_mod_prime(matrix, field.prime, caps);
}

HomologyReport reduced_betti(const SimplicialComplex& complex, int up_to,
                             const Field& field, const Caps& caps) {
  HomologyReport report;
  report.field = field;
  report.up_to = up_to;
  if (complex.facets().empty()) {
    report.empty_complex = true;
    report.connectivity = -2;
    report.betti.assign(std::max(up_to + 1, 0), 0);
    return report;
  }

  const int dim = complex.dimension();
  const int top = std::min(up_to + 1, dim);
  const FaceTable table = faces_by_degree(complex, top, caps);

  // ranks[k] = rank of the boundary map from degree k, with the
  // augmentation map in degree 0; degrees above the dimension are zero maps.
  std::vector<long long> ranks(top + 2, 0);
  for (int k = 0; k <= top; ++k) {
    ranks[k] = matrix_rank(boundary_matrix(table, k), field, caps);
  }
  report.betti.assign(up_to + 1, 0);
  for (int k = 0; k <= up_to; ++k) {
    if (k > top) break;  // no faces of this degree: reduced homology is zero
    const long long kernel = table.count(k) - ranks[k];
    const long long image = k + 1 <= top ? ranks[k + 1] : 0;
    report.betti[k] = kernel - image;
    if (report.betti[k] < 0) {
      throw std::logic_error("reduced_betti: negative Betti number");
    }
  }
  report.connectivity = up_to;
  for (int k = 0; k <= up_to; ++k) {
    if (report.betti[k] != 0) {
      report.connectivity = k - 1;
      break;
    }
  }
  return report;
}

ConnectivityCheck homological_connectivity(const SimplicialComplex& complex,
                                           int target,
                                           const std::vector<Field>& fields,
                                           const Caps& caps) {
  ConnectivityCheck check;
  check.target = target;
  if (target < 0) {
    check.pass = true;
    check.vacuous = true;
    return check;
  }
  check.pass = true;
  for (const auto& field : fields) {
    HomologyReport report = reduced_betti(complex, target + 1, field, caps);
    bool vanish = !report.empty_complex;
    for (int k = 0; k <= target && vanish; ++k) {
      vanish = report.betti[k] == 0;
    }
    check.pass = check.pass && vanish;
    check.reports.push_back(std::move(report));
  }
  for (std::size_t i = 1; i < check.reports.size(); ++i) {
    if (check.reports[i].betti != check.reports[0].betti) {
      check.field_disagreement = true;  // possible torsion: surface it
    }
  }
  return check;
}

}  // namespace tvgrid
