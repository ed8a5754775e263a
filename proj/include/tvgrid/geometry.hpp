// Exact rational linear algebra: phase-1 simplex feasibility, common points
// of convex hulls, line/convex-hull intersection, and transversal lines.
#pragma once

#include "tvgrid/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tvgrid {

// A point of R^d as a vector of exact rationals.
using RationalPoint = RationalVector;

// System of equalities A x = b with every variable constrained x >= 0.
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<RationalVector> coeffs;  // one row per equality, length num_vars
  RationalVector rhs;
};

// Exact nonnegative solution of A x = b, or nullopt if none exists.
// Phase-1 simplex with Bland's rule; throws std::invalid_argument on a
// dimension mismatch and std::logic_error if the pivot cap is ever hit.
std::optional<RationalVector> lp_feasible(const LinearSystem& system);

// A witness that the convex hulls of p point sets share a point: the point
// itself plus, per hull, convex coefficients indexed like the input points.
struct HullWitness {
  RationalPoint point;
  std::vector<RationalVector> coefficients;
};

// Decides whether the convex hulls of the given point sets intersect.
// Encoding: one simplex variable per hull vertex, per-hull sum-to-one rows,
// and coordinate equalities tying hull 1's combination to each other hull's.
std::optional<HullWitness> hulls_common_point(
    const std::vector<std::vector<RationalPoint>>& hulls);

// Independent membership test: x in conv(hull), decided by its own LP.
bool point_in_hull(const RationalPoint& x,
                   const std::vector<RationalPoint>& hull);

// Exact re-certification of a witness: coefficients nonnegative, each hull's
// coefficients sum to 1 and reproduce the point exactly, and the point's
// membership in every hull re-proved by an independent LP.
bool check_hull_witness(const std::vector<std::vector<RationalPoint>>& hulls,
                        const HullWitness& witness);

struct Line {
  RationalPoint base;
  RationalVector direction;  // at least one nonzero coordinate
};

// True iff the line meets conv(points). The line parameter is free, encoded
// as the difference of two nonnegative variables.
bool line_meets_convex(const Line& line,
                       const std::vector<RationalPoint>& points);

// Given x in conv(part_b + part_c) with the certifying coefficients split by
// sub-hull, and x also lying in some third hull, returns a line through x
// meeting conv(part_b) and conv(part_c). Degenerate mass splits fall back to
// a vertex of the massless hull, then to the first coordinate axis.
Line extract_transversal_line(const RationalPoint& x,
                              const std::vector<RationalPoint>& part_b,
                              const RationalVector& coeff_b,
                              const std::vector<RationalPoint>& part_c,
                              const RationalVector& coeff_c);

}  // namespace tvgrid
