#include "freesum/volume.hpp"

#include <algorithm>
#include <set>

#include "freesum/errors.hpp"
#include "freesum/linalg.hpp"

namespace freesum {

namespace {

class Puller {
public:
    Puller(const Polytope& p, PullOrder order) : p_(p), order_(order) {}

    void run(const std::vector<std::size_t>& face, int dim, std::vector<std::size_t>& apexes) {
        if (face.size() == static_cast<std::size_t>(dim) + 1) {
            std::vector<std::size_t> s = apexes;
            s.insert(s.end(), face.begin(), face.end());
            std::sort(s.begin(), s.end());
            out_.simplices.push_back(std::move(s));
            return;
        }
        const auto& verts = p_.vertices();
        std::size_t apex = face.front();
        for (auto v : face)
            if (order_ == PullOrder::LexMin ? verts[v] < verts[apex] : verts[apex] < verts[v]) apex = v;

        std::set<std::vector<std::size_t>> done;
        apexes.push_back(apex);
        for (const auto& f : p_.facets()) {
            std::vector<std::size_t> sub;
            std::set_intersection(face.begin(), face.end(), f.vertices.begin(), f.vertices.end(),
                                  std::back_inserter(sub));
            if (sub.size() < static_cast<std::size_t>(dim)) continue;
            if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
            if (!done.insert(sub).second) continue;
            if (affine_dim(sub) != dim - 1) continue;
            run(sub, dim - 1, apexes);
        }
        apexes.pop_back();
    }

    Triangulation take() { return std::move(out_); }

private:
    int affine_dim(const std::vector<std::size_t>& idx) const {
        PointSet pts;
        pts.reserve(idx.size());
        for (auto i : idx) pts.push_back(p_.vertices()[i]);
        return affine_dimension(pts);
    }

    const Polytope& p_;
    PullOrder order_;
    Triangulation out_;
};

}  // namespace

Triangulation triangulate(const Polytope& p, PullOrder order) {
    std::vector<std::size_t> all(p.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Puller puller(p, order);
    std::vector<std::size_t> apexes;
    puller.run(all, static_cast<int>(p.ambient_dim()), apexes);
    return puller.take();
}

Rational simplex_normalized_volume(const PointSet& vertices, const std::vector<std::size_t>& simplex) {
    RatMatrix edges;
    edges.reserve(simplex.size() - 1);
    for (std::size_t k = 1; k < simplex.size(); ++k) edges.push_back(vertices[simplex[k]] - vertices[simplex[0]]);
    return abs(det(edges));
}

Rational normalized_volume(const Polytope& p) {
    Rational total = 0;
    for (const auto& s : triangulate(p).simplices) total += simplex_normalized_volume(p.vertices(), s);
    return total;
}

Rational euclidean_volume(const Polytope& p) {
    return normalized_volume(p) / Rational(factorial(static_cast<unsigned>(p.ambient_dim())));
}

Rational euclidean_volume(const PointSet& points) {
    if (points.empty()) return 0;
    if (affine_dimension(points) < static_cast<int>(points.front().size())) return 0;
    return euclidean_volume(convex_hull(points));
}

Rational relative_normalized_volume(const PointSet& points) {
    if (points.empty()) throw DomainError("relative_normalized_volume of an empty set");
    for (const auto& p : points)
        if (!is_integral(p)) throw DomainError("relative_normalized_volume requires lattice points");
    const int r = affine_dimension(points);
    if (r <= 0) return 1;
    const std::size_t n = points.front().size();

    RatMatrix diff_columns(n, RatVector(points.size() - 1));
    for (std::size_t k = 1; k < points.size(); ++k) {
        auto diff = points[k] - points[0];
        for (std::size_t c = 0; c < n; ++c) diff_columns[c][k - 1] = diff[c];
    }
    // U * D^T is in HNF with zero rows below the rank, so U maps the lattice
    // points of the affine hull bijectively onto Z^r x {0}.
    const auto hnf = hermite_normal_form(diff_columns);
    PointSet projected{zero_vector(static_cast<std::size_t>(r))};
    for (std::size_t k = 1; k < points.size(); ++k) {
        auto y = multiply(hnf.u, points[k] - points[0]);
        for (std::size_t c = static_cast<std::size_t>(r); c < n; ++c)
            if (y[c] != 0) throw InternalConsistencyError("lattice projection left the affine hull");
        y.resize(static_cast<std::size_t>(r));
        projected.push_back(std::move(y));
    }
    return normalized_volume(convex_hull(projected));
}

}  // namespace freesum
