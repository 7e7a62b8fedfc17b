#ifndef FREESUM_VOLUME_HPP
#define FREESUM_VOLUME_HPP

#include <cstddef>
#include <vector>

#include "freesum/polytope.hpp"

namespace freesum {

struct Triangulation {
    // Each simplex is d+1 sorted indices into the parent polytope's vertices.
    std::vector<std::vector<std::size_t>> simplices;
};

enum class PullOrder { LexMin, LexMax };

// Pulling triangulation: cone the lexicographically smallest (or largest)
// vertex over the recursively triangulated facets not containing it. Uses
// only vertices of p.
Triangulation triangulate(const Polytope& p, PullOrder order = PullOrder::LexMin);

// |det| of the edge matrix of a simplex, i.e. its normalized volume.
Rational simplex_normalized_volume(const PointSet& vertices, const std::vector<std::size_t>& simplex);

Rational euclidean_volume(const Polytope& p);
Rational normalized_volume(const Polytope& p);

// Euclidean volume of conv(points) in the points' ambient space; zero when the
// set is lower-dimensional.
Rational euclidean_volume(const PointSet& points);

// Normalized volume relative to the lattice induced on the affine hull of the
// (integral) points. A single point has volume 1.
Rational relative_normalized_volume(const PointSet& points);

}  // namespace freesum

#endif  // FREESUM_VOLUME_HPP
