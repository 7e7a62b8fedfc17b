#include "freesum/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "freesum/errors.hpp"
#include "freesum/linalg.hpp"

namespace freesum {

namespace {

PointSet deduplicate(const PointSet& points) {
    PointSet out;
    std::set<RatVector> seen;
    for (const auto& p : points)
        if (seen.insert(p).second) out.push_back(p);
    return out;
}

void check_uniform_dimension(const PointSet& points) {
    if (points.empty()) throw DomainError("empty point set");
    const std::size_t d = points.front().size();
    if (d == 0) throw DimensionError("points must have dimension >= 1");
    for (const auto& p : points)
        if (p.size() != d) throw DimensionError("points have mixed dimensions");
}

int affine_dimension_of(const PointSet& pts, const std::vector<std::size_t>& idx) {
    if (idx.empty()) return -1;
    RatMatrix diffs;
    diffs.reserve(idx.size() - 1);
    for (std::size_t k = 1; k < idx.size(); ++k) diffs.push_back(pts[idx[k]] - pts[idx[0]]);
    return static_cast<int>(rank(diffs));
}

// Scales a rational normal to the primitive integer vector on the same ray.
RatVector primitive(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    std::vector<Integer> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        ints.push_back(x.get_num() * (l / x.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    RatVector out;
    out.reserve(v.size());
    for (auto& n : ints) out.emplace_back(Integer(n / g));
    return out;
}

// Hyperplane through the indexed points (which must span a hyperplane),
// oriented so that `inside` is strictly feasible.
Hyperplane plane_through(const PointSet& pts, const std::vector<std::size_t>& idx, const RatVector& inside) {
    const std::size_t d = inside.size();
    RatMatrix diffs;
    for (std::size_t k = 1; k < idx.size(); ++k) diffs.push_back(pts[idx[k]] - pts[idx[0]]);
    auto kernel = null_space(diffs, d);
    if (kernel.size() != 1) throw InternalConsistencyError("hull: facet candidate does not span a hyperplane");
    Hyperplane h{primitive(kernel.front()), 0};
    h.offset = dot(h.normal, pts[idx[0]]);
    if (dot(h.normal, inside) > h.offset) {
        for (auto& x : h.normal) x = -x;
        h.offset = -h.offset;
    }
    return h;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct WorkFacet {
    Hyperplane plane;
    std::vector<std::size_t> points;  // sorted indices of hull points on the plane
};

}  // namespace

const char* to_string(Location loc) {
    switch (loc) {
        case Location::Interior: return "interior";
        case Location::Boundary: return "boundary";
        case Location::Outside: return "outside";
    }
    return "?";
}

bool Polytope::is_lattice() const {
    for (const auto& v : vertices_)
        if (!is_integral(v)) return false;
    return true;
}

int affine_dimension(const PointSet& points) {
    if (points.empty()) return -1;
    RatMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t k = 1; k < points.size(); ++k) diffs.push_back(points[k] - points[0]);
    return static_cast<int>(rank(diffs));
}

Polytope convex_hull(const PointSet& input) {
    check_uniform_dimension(input);
    const PointSet pts = deduplicate(input);
    const std::size_t d = pts.front().size();

    // Greedy rank growth for the initial simplex.
    std::vector<std::size_t> simplex{0};
    RatMatrix diffs;
    for (std::size_t i = 1; i < pts.size() && simplex.size() < d + 1; ++i) {
        diffs.push_back(pts[i] - pts[0]);
        if (rank(diffs) == diffs.size())
            simplex.push_back(i);
        else
            diffs.pop_back();
    }
    if (simplex.size() < d + 1) throw LowerDimensionalError(static_cast<int>(simplex.size()) - 1, static_cast<int>(d));

    RatVector centre = zero_vector(d);
    for (auto i : simplex) centre = centre + pts[i];
    centre = Rational(1, static_cast<unsigned long>(d + 1)) * centre;

    std::vector<WorkFacet> facets;
    for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < simplex.size(); ++k)
            if (k != skip) idx.push_back(simplex[k]);
        std::sort(idx.begin(), idx.end());
        facets.push_back({plane_through(pts, idx, centre), idx});
    }

    std::vector<bool> in_simplex(pts.size(), false);
    for (auto i : simplex) in_simplex[i] = true;

    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (in_simplex[i]) continue;
        const RatVector& p = pts[i];
        std::vector<int> side(facets.size());
        bool any_visible = false;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            side[f] = -sgn(facets[f].plane.slack(p));  // +1 visible, 0 coplanar, -1 beneath
            any_visible = any_visible || side[f] > 0;
        }
        if (!any_visible) continue;

        std::vector<WorkFacet> next;
        std::map<std::pair<RatVector, Rational>, std::size_t> by_plane;
        auto add_facet = [&](WorkFacet wf) {
            auto key = std::make_pair(wf.plane.normal, wf.plane.offset);
            auto it = by_plane.find(key);
            if (it == by_plane.end()) {
                by_plane.emplace(std::move(key), next.size());
                next.push_back(std::move(wf));
                return;
            }
            auto& pts_here = next[it->second].points;
            std::vector<std::size_t> merged;
            std::set_union(pts_here.begin(), pts_here.end(), wf.points.begin(), wf.points.end(),
                           std::back_inserter(merged));
            pts_here = std::move(merged);
        };

        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (side[f] < 0) add_facet(facets[f]);
            if (side[f] == 0) {
                WorkFacet wf = facets[f];
                wf.points.insert(std::upper_bound(wf.points.begin(), wf.points.end(), i), i);
                add_facet(std::move(wf));
            }
        }
        // Horizon ridges: faces of dimension d-2 shared by a visible and a
        // beneath facet. Each one cones to p as a new facet.
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (side[f] <= 0) continue;
            for (std::size_t g = 0; g < facets.size(); ++g) {
                if (side[g] >= 0) continue;
                auto ridge = intersect(facets[f].points, facets[g].points);
                if (ridge.size() + 1 < d) continue;
                if (affine_dimension_of(pts, ridge) != static_cast<int>(d) - 2) continue;
                ridge.push_back(i);
                std::sort(ridge.begin(), ridge.end());
                add_facet({plane_through(pts, ridge, centre), ridge});
            }
        }
        facets = std::move(next);
    }

    // A hull point is a vertex iff the normals of its incident facets span R^d.
    std::vector<std::vector<std::size_t>> incident(pts.size());
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (auto j : facets[f].points) incident[j].push_back(f);
    std::vector<long> new_index(pts.size(), -1);
    PointSet vertices;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        if (incident[j].size() < d) continue;
        RatMatrix normals;
        for (auto f : incident[j]) normals.push_back(facets[f].plane.normal);
        if (rank(normals) != d) continue;
        new_index[j] = static_cast<long>(vertices.size());
        vertices.push_back(pts[j]);
    }

    std::vector<Facet> out;
    out.reserve(facets.size());
    for (auto& wf : facets) {
        Facet f{std::move(wf.plane), {}};
        for (auto j : wf.points)
            if (new_index[j] >= 0) f.vertices.push_back(static_cast<std::size_t>(new_index[j]));
        out.push_back(std::move(f));
    }
    return Polytope(d, std::move(vertices), std::move(out));
}

PointSet extreme_points(const PointSet& input) {
    check_uniform_dimension(input);
    const PointSet pts = deduplicate(input);
    const std::size_t d = pts.front().size();
    const int r = affine_dimension(pts);
    if (r == 0) return pts;
    if (r == static_cast<int>(d)) return convex_hull(pts).vertices();

    // Project onto r coordinates that stay injective on the affine hull.
    RatMatrix diffs;
    for (std::size_t k = 1; k < pts.size(); ++k) diffs.push_back(pts[k] - pts[0]);
    std::vector<std::size_t> coords;
    for (std::size_t c = 0; c < d && coords.size() < static_cast<std::size_t>(r); ++c) {
        coords.push_back(c);
        RatMatrix sub;
        for (const auto& row : diffs) {
            RatVector s;
            for (auto cc : coords) s.push_back(row[cc]);
            sub.push_back(std::move(s));
        }
        if (rank(sub) < coords.size()) coords.pop_back();
    }
    PointSet projected;
    for (const auto& p : pts) {
        RatVector s;
        for (auto c : coords) s.push_back(p[c]);
        projected.push_back(std::move(s));
    }
    const auto hull = convex_hull(projected);
    std::set<RatVector> keep(hull.vertices().begin(), hull.vertices().end());
    PointSet out;
    for (std::size_t k = 0; k < pts.size(); ++k)
        if (keep.count(projected[k])) out.push_back(pts[k]);
    return out;
}

Location contains(const Polytope& p, const RatVector& x) {
    if (x.size() != p.ambient_dim()) throw DimensionError("contains: point dimension mismatch");
    bool on_boundary = false;
    for (const auto& f : p.facets()) {
        int s = sgn(f.plane.slack(x));
        if (s < 0) return Location::Outside;
        if (s == 0) on_boundary = true;
    }
    return on_boundary ? Location::Boundary : Location::Interior;
}

std::vector<Face> face_lattice(const Polytope& p) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> all(p.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    seen.insert(all);
    seen.insert({});
    for (const auto& f : p.facets())
        if (seen.insert(f.vertices).second) queue.push_back(f.vertices);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& f : p.facets()) {
            auto meet = intersect(queue[q], f.vertices);
            if (seen.insert(meet).second) queue.push_back(std::move(meet));
        }
    }
    std::vector<Face> faces;
    faces.reserve(seen.size());
    for (const auto& s : seen) faces.push_back({s, affine_dimension_of(p.vertices(), s)});
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
    return faces;
}

Polytope polar_dual(const Polytope& p) {
    if (contains(p, zero_vector(p.ambient_dim())) != Location::Interior)
        throw UnboundedDualError("polar dual is unbounded: origin is not an interior point");
    PointSet dual;
    dual.reserve(p.facets().size());
    for (const auto& f : p.facets()) dual.push_back((1 / f.plane.offset) * f.plane.normal);
    return convex_hull(dual);
}

bool is_reflexive(const Polytope& p) {
    if (!p.is_lattice()) throw DomainError("is_reflexive requires a lattice polytope");
    if (contains(p, zero_vector(p.ambient_dim())) != Location::Interior) return false;
    for (const auto& f : p.facets())
        if (f.plane.offset != 1) return false;
    return true;
}

Polytope affine_image(const Polytope& p, const RatMatrix& linear, const RatVector& shift) {
    PointSet image;
    image.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) image.push_back(multiply(linear, v) + shift);
    return convex_hull(image);
}

Polytope cube(std::size_t dim, long lo, long hi) {
    PointSet pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        RatVector v(dim);
        for (std::size_t k = 0; k < dim; ++k) v[k] = (mask >> k) & 1 ? hi : lo;
        pts.push_back(std::move(v));
    }
    return convex_hull(pts);
}

Polytope cross_polytope(std::size_t dim) {
    PointSet pts;
    for (std::size_t k = 0; k < dim; ++k)
        for (long s : {1L, -1L}) {
            RatVector v = zero_vector(dim);
            v[k] = s;
            pts.push_back(std::move(v));
        }
    return convex_hull(pts);
}

}  // namespace freesum
