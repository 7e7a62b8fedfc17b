#ifndef FREESUM_ORACLES_HPP
#define FREESUM_ORACLES_HPP

// Reference computations that share no code path with the production
// routines they check (no facets, no triangulation, no inclusion–exclusion).
// Slow; meant for tests and the self-test harness.

#include "freesum/rational.hpp"

namespace freesum::oracle {

// Laplace expansion along the first row.
Rational cofactor_det(const RatMatrix& m);

// x ∈ conv(points) via Carathéodory: some affinely independent subset of
// d+1 points has nonnegative barycentric coordinates for x. Points must span
// R^d.
bool in_hull(const PointSet& points, const RatVector& x);

// |m conv(points) ∩ Z^d| by testing every integer point of the box with
// in_hull.
Integer lattice_count(const PointSet& points, unsigned m);

// Coefficient of λ1 λ2 of vol(λ1 A + λ2 B) for planar A, B, recovered by
// solving for the quadratic form through the samples (1,1), (1,2), (2,1).
Rational mixed_area_by_interpolation(const PointSet& a, const PointSet& b);

}  // namespace freesum::oracle

#endif  // FREESUM_ORACLES_HPP
