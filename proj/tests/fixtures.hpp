#ifndef FREESUM_TESTS_FIXTURES_HPP
#define FREESUM_TESTS_FIXTURES_HPP

#include <set>

#include "freesum/polytope.hpp"
#include "freesum/rational.hpp"

namespace freesum::fixtures {

inline RatVector pt(std::initializer_list<long> xs) { return integer_vector(xs); }

// Reeve tetrahedron conv{0, e1, e2, (1,1,r)}.
inline PointSet reeve_points(long r) { return {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, r})}; }
inline Polytope reeve(long r) { return convex_hull(reeve_points(r)); }

inline Polytope segment(long a, long b) { return convex_hull({pt({a}), pt({b})}); }
inline Polytope unit_square() { return convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}); }
inline PointSet unit_triangle() { return {pt({0, 0}), pt({1, 0}), pt({0, 1})}; }

inline std::set<RatVector> as_set(const PointSet& pts) { return {pts.begin(), pts.end()}; }

// Shoelace formula for a polygon listed in cyclic order.
inline Rational shoelace(const PointSet& cyclic) {
    Rational twice = 0;
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
        const auto& a = cyclic[i];
        const auto& b = cyclic[(i + 1) % cyclic.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
}

}  // namespace freesum::fixtures

#endif  // FREESUM_TESTS_FIXTURES_HPP
