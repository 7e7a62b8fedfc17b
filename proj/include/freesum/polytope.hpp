#ifndef FREESUM_POLYTOPE_HPP
#define FREESUM_POLYTOPE_HPP

#include <cstddef>
#include <vector>

#include "freesum/rational.hpp"

namespace freesum {

// Feasible side is {x : normal . x <= offset}.
struct Hyperplane {
    RatVector normal;
    Rational offset;

    Rational slack(const RatVector& x) const { return offset - dot(normal, x); }
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

struct Facet {
    Hyperplane plane;
    std::vector<std::size_t> vertices;  // sorted indices into Polytope::vertices()
};

struct Face {
    std::vector<std::size_t> vertices;  // sorted; empty for the empty face
    int dim = -1;
    friend bool operator==(const Face&, const Face&) = default;
};

enum class Location { Interior, Boundary, Outside };

const char* to_string(Location loc);

// Full-dimensional convex polytope in V-representation with its irredundant
// facet list. Only convex_hull (and functions built on it) construct one, so
// every listed vertex is extreme and the facets are complete.
class Polytope {
public:
    std::size_t ambient_dim() const { return dim_; }
    const PointSet& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    bool is_lattice() const;

private:
    Polytope(std::size_t dim, PointSet vertices, std::vector<Facet> facets)
        : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

    friend Polytope convex_hull(const PointSet& points);

    std::size_t dim_;
    PointSet vertices_;
    std::vector<Facet> facets_;
};

// Exact incremental (beneath-beyond) hull. Duplicates are dropped, vertices
// keep their first-occurrence input order. Throws LowerDimensionalError when
// the points do not span their ambient space.
Polytope convex_hull(const PointSet& points);

// Rank of the differences from the first point; -1 for an empty set.
int affine_dimension(const PointSet& points);

// Extreme points of an arbitrary-dimensional point set, in input order.
PointSet extreme_points(const PointSet& points);

Location contains(const Polytope& p, const RatVector& x);

// Every face as (vertex set, dim), including the empty face and P itself,
// sorted by (dim, vertex indices).
std::vector<Face> face_lattice(const Polytope& p);

// Throws UnboundedDualError unless the origin is strictly interior.
Polytope polar_dual(const Polytope& p);

// Origin-centred reflexivity. Throws DomainError on non-lattice input.
bool is_reflexive(const Polytope& p);

// x -> linear * x + shift; linear must be invertible.
Polytope affine_image(const Polytope& p, const RatMatrix& linear, const RatVector& shift);

Polytope cube(std::size_t dim, long lo, long hi);
Polytope cross_polytope(std::size_t dim);

}  // namespace freesum

#endif  // FREESUM_POLYTOPE_HPP
