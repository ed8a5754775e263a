#include "tvgrid/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvgrid {

namespace {

constexpr long kPivotCap = 1 << 20;

// Dense phase-1 tableau. Columns: structural vars, then one artificial per
// row, then the right-hand side.
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // structural + artificial
  std::vector<RationalVector> a;
  RationalVector rhs;
  RationalVector obj;  // reduced costs of minimizing the artificial sum
  Rational obj_value;  // current (negated) objective
  std::vector<std::size_t> basis;
};

void pivot(Tableau& t, std::size_t pr, std::size_t pc) {
  const Rational piv = t.a[pr][pc];
  for (std::size_t j = 0; j < t.cols; ++j) t.a[pr][j] /= piv;
  t.rhs[pr] /= piv;
  for (std::size_t i = 0; i < t.rows; ++i) {
    if (i == pr || t.a[i][pc] == 0) continue;
    const Rational factor = t.a[i][pc];
    for (std::size_t j = 0; j < t.cols; ++j) t.a[i][j] -= factor * t.a[pr][j];
    t.rhs[i] -= factor * t.rhs[pr];
  }
  if (t.obj[pc] != 0) {
    const Rational factor = t.obj[pc];
    for (std::size_t j = 0; j < t.cols; ++j) t.obj[j] -= factor * t.a[pr][j];
    t.obj_value -= factor * t.rhs[pr];
  }
  t.basis[pr] = pc;
}

}  // namespace

std::optional<RationalVector> lp_feasible(const LinearSystem& system) {
  const std::size_t rows = system.coeffs.size();
  if (system.rhs.size() != rows) {
    throw std::invalid_argument("lp_feasible: rhs length != row count");
  }
  for (const auto& row : system.coeffs) {
    if (row.size() != system.num_vars) {
      throw std::invalid_argument("lp_feasible: row length != num_vars");
    }
  }
  const std::size_t n = system.num_vars;
  if (rows == 0) return RationalVector(n, Rational(0));

  Tableau t;
  t.rows = rows;
  t.cols = n + rows;
  t.a.assign(rows, RationalVector(t.cols, Rational(0)));
  t.rhs.assign(rows, Rational(0));
  t.basis.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = system.rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) {
      t.a[i][j] = flip ? -system.coeffs[i][j] : system.coeffs[i][j];
    }
    t.rhs[i] = flip ? -system.rhs[i] : system.rhs[i];
    t.a[i][n + i] = 1;
    t.basis[i] = n + i;
  }
  // Objective: minimize the artificial sum, expressed over the nonbasics.
  t.obj.assign(t.cols, Rational(0));
  t.obj_value = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.obj[j] -= t.a[i][j];
    t.obj_value -= t.rhs[i];
  }

  long pivots = 0;
  while (true) {
    // Bland: entering column = lowest index with a negative reduced cost.
    std::size_t enter = t.cols;
    for (std::size_t j = 0; j < t.cols; ++j) {
      if (t.obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == t.cols) break;

    // Ratio test; ties broken by the lowest-index basic variable.
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t.a[i][enter] <= 0) continue;
      Rational ratio = t.rhs[i] / t.a[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) {
      // The artificial sum is bounded below by zero, so this cannot happen.
      throw std::logic_error("lp_feasible: unbounded phase-1 objective");
    }
    pivot(t, leave, enter);
    if (++pivots > kPivotCap) {
      throw std::logic_error("lp_feasible: pivot cap exceeded");
    }
  }

  // Optimal value of the artificial sum is -obj_value.
  if (t.obj_value != 0) return std::nullopt;

  RationalVector assignment(n, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (t.basis[i] < n) assignment[t.basis[i]] = t.rhs[i];
  }
  return assignment;
}

std::optional<HullWitness> hulls_common_point(
    const std::vector<std::vector<RationalPoint>>& hulls) {
  if (hulls.empty()) throw std::invalid_argument("no hulls given");
  for (const auto& hull : hulls) {
    if (hull.empty()) throw std::invalid_argument("empty hull");
  }
  const std::size_t dim = hulls[0][0].size();
  for (const auto& hull : hulls) {
    for (const auto& pt : hull) {
      if (pt.size() != dim) throw std::invalid_argument("mixed dimensions");
    }
  }

  const std::size_t p = hulls.size();
  std::vector<std::size_t> offset(p, 0);
  std::size_t num_vars = 0;
  for (std::size_t j = 0; j < p; ++j) {
    offset[j] = num_vars;
    num_vars += hulls[j].size();
  }

  LinearSystem sys;
  sys.num_vars = num_vars;
  for (std::size_t j = 0; j < p; ++j) {
    RationalVector row(num_vars, Rational(0));
    for (std::size_t v = 0; v < hulls[j].size(); ++v) row[offset[j] + v] = 1;
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(Rational(1));
  }
  for (std::size_t j = 1; j < p; ++j) {
    for (std::size_t c = 0; c < dim; ++c) {
      RationalVector row(num_vars, Rational(0));
      for (std::size_t v = 0; v < hulls[0].size(); ++v) {
        row[offset[0] + v] = hulls[0][v][c];
      }
      for (std::size_t v = 0; v < hulls[j].size(); ++v) {
        row[offset[j] + v] = -hulls[j][v][c];
      }
      sys.coeffs.push_back(std::move(row));
      sys.rhs.push_back(Rational(0));
    }
  }

  auto solution = lp_feasible(sys);
  if (!solution) return std::nullopt;

  HullWitness witness;
  witness.coefficients.resize(p);
  for (std::size_t j = 0; j < p; ++j) {
    witness.coefficients[j].assign(solution->begin() + offset[j],
                                   solution->begin() + offset[j] +
                                       hulls[j].size());
  }
  witness.point.assign(dim, Rational(0));
  for (std::size_t v = 0; v < hulls[0].size(); ++v) {
    for (std::size_t c = 0; c < dim; ++c) {
      witness.point[c] += witness.coefficients[0][v] * hulls[0][v][c];
    }
  }
  return witness;
}

bool point_in_hull(const RationalPoint& x,
                   const std::vector<RationalPoint>& hull) {
  if (hull.empty()) return false;
  const std::size_t dim = x.size();
  for (const auto& pt : hull) {
    if (pt.size() != dim) throw std::invalid_argument("mixed dimensions");
  }
  LinearSystem sys;
  sys.num_vars = hull.size();
  sys.coeffs.push_back(RationalVector(hull.size(), Rational(1)));
  sys.rhs.push_back(Rational(1));
  for (std::size_t c = 0; c < dim; ++c) {
    RationalVector row(hull.size());
    for (std::size_t v = 0; v < hull.size(); ++v) row[v] = hull[v][c];
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(x[c]);
  }
  return lp_feasible(sys).has_value();
}

bool check_hull_witness(const std::vector<std::vector<RationalPoint>>& hulls,
                        const HullWitness& witness) {
  if (witness.coefficients.size() != hulls.size()) return false;
  const std::size_t dim = witness.point.size();
  for (std::size_t j = 0; j < hulls.size(); ++j) {
    const auto& hull = hulls[j];
    const auto& coeff = witness.coefficients[j];
    if (coeff.size() != hull.size()) return false;
    Rational total = 0;
    RationalPoint combo(dim, Rational(0));
    for (std::size_t v = 0; v < hull.size(); ++v) {
      if (coeff[v] < 0) return false;
      total += coeff[v];
      for (std::size_t c = 0; c < dim; ++c) combo[c] += coeff[v] * hull[v][c];
    }
    if (total != 1) return false;
    if (combo != witness.point) return false;
    if (!point_in_hull(witness.point, hull)) return false;
  }
  return true;
}

bool line_meets_convex(const Line& line,
                       const std::vector<RationalPoint>& points) {
  const std::size_t dim = line.base.size();
  if (line.direction.size() != dim) {
    throw std::invalid_argument("line dimension mismatch");
  }
  bool nonzero = false;
  for (const auto& c : line.direction) nonzero = nonzero || c != 0;
  if (!nonzero) throw std::invalid_argument("zero line direction");
  if (points.empty()) return false;
  for (const auto& pt : points) {
    if (pt.size() != dim) throw std::invalid_argument("mixed dimensions");
  }

  // Variables: one per hull vertex, then t+ and t- for the line parameter.
  const std::size_t k = points.size();
  LinearSystem sys;
  sys.num_vars = k + 2;
  {
    RationalVector row(sys.num_vars, Rational(0));
    for (std::size_t v = 0; v < k; ++v) row[v] = 1;
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(Rational(1));
  }
  for (std::size_t c = 0; c < dim; ++c) {
    RationalVector row(sys.num_vars, Rational(0));
    for (std::size_t v = 0; v < k; ++v) row[v] = points[v][c];
    row[k] = -line.direction[c];
    row[k + 1] = line.direction[c];
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(line.base[c]);
  }
  return lp_feasible(sys).has_value();
}

Line extract_transversal_line(const RationalPoint& x,
                              const std::vector<RationalPoint>& part_b,
                              const RationalVector& coeff_b,
                              const std::vector<RationalPoint>& part_c,
                              const RationalVector& coeff_c) {
  const std::size_t dim = x.size();
  if (coeff_b.size() != part_b.size() || coeff_c.size() != part_c.size()) {
    throw std::invalid_argument("coefficient/point count mismatch");
  }
  Rational alpha = 0, beta = 0;
  RationalPoint sum_b(dim, Rational(0)), sum_c(dim, Rational(0));
  for (std::size_t v = 0; v < part_b.size(); ++v) {
    if (coeff_b[v] < 0) throw std::invalid_argument("negative coefficient");
    alpha += coeff_b[v];
    for (std::size_t c = 0; c < dim; ++c) sum_b[c] += coeff_b[v] * part_b[v][c];
  }
  for (std::size_t v = 0; v < part_c.size(); ++v) {
    if (coeff_c[v] < 0) throw std::invalid_argument("negative coefficient");
    beta += coeff_c[v];
    for (std::size_t c = 0; c < dim; ++c) sum_c[c] += coeff_c[v] * part_c[v][c];
  }
  if (alpha + beta != 1) {
    throw std::invalid_argument("coefficients do not sum to 1");
  }
  RationalPoint recombined(dim, Rational(0));
  for (std::size_t c = 0; c < dim; ++c) recombined[c] = sum_b[c] + sum_c[c];
  if (recombined != x) {
    throw std::invalid_argument("coefficients do not reproduce the point");
  }

  auto through = [&](const std::vector<RationalPoint>& verts) -> Line {
    // Line through x and the first vertex distinct from x; if the whole
    // hull collapses onto x, any direction works.
    for (const auto& v : verts) {
      if (v != x) {
        RationalVector dir(dim);
        for (std::size_t c = 0; c < dim; ++c) dir[c] = v[c] - x[c];
        return Line{x, dir};
      }
    }
    RationalVector e1(dim, Rational(0));
    e1[0] = 1;
    return Line{x, e1};
  };

  if (alpha == 0) return through(part_b);
  if (beta == 0) return through(part_c);

  RationalPoint u(dim), v(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    u[c] = sum_b[c] / alpha;
    v[c] = sum_c[c] / beta;
  }
  if (u == v) return through(part_c);  // both masses sit at x itself
  RationalVector dir(dim);
  for (std::size_t c = 0; c < dim; ++c) dir[c] = v[c] - u[c];
  return Line{u, dir};
}

}  // namespace tvgrid
