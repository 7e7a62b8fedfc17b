#include "freesum/sums.hpp"

#include "freesum/errors.hpp"
#include "freesum/volume.hpp"

namespace freesum {

PointSet embed_first(const PointSet& points, std::size_t trailing_zeros) {
    PointSet out;
    out.reserve(points.size());
    for (const auto& p : points) {
        RatVector v = p;
        v.resize(p.size() + trailing_zeros, Rational(0));
        out.push_back(std::move(v));
    }
    return out;
}

PointSet embed_second(const PointSet& points, std::size_t leading_zeros) {
    PointSet out;
    out.reserve(points.size());
    for (const auto& p : points) {
        RatVector v = zero_vector(leading_zeros);
        v.insert(v.end(), p.begin(), p.end());
        out.push_back(std::move(v));
    }
    return out;
}

FreeSum free_sum(const Polytope& p, const Polytope& q) {
    const std::size_t m = p.ambient_dim(), n = q.ambient_dim();
    PointSet pts = embed_first(p.vertices(), n);
    for (auto& v : embed_second(q.vertices(), m)) pts.push_back(std::move(v));
    const bool origins = contains(p, zero_vector(m)) != Location::Outside &&
                         contains(q, zero_vector(n)) != Location::Outside;
    return {convex_hull(pts), origins};
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
    if (a.empty() || b.empty()) throw DomainError("minkowski_sum of an empty set");
    if (a.front().size() != b.front().size()) throw DimensionError("minkowski_sum: ambient dimensions differ");
    PointSet sums;
    sums.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) sums.push_back(x + y);
    return extreme_points(sums);
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
    return convex_hull(minkowski_sum(a.vertices(), b.vertices()));
}

Rational mixed_volume(const std::vector<PointSet>& operands) {
    const std::size_t n = operands.size();
    if (n == 0) throw DimensionError("mixed_volume needs at least one operand");
    if (n > kMixedVolumeMaxArity)
        throw DomainError("mixed_volume: " + std::to_string(n) + " operands exceed the cap of " +
                          std::to_string(kMixedVolumeMaxArity));
    for (const auto& op : operands) {
        if (op.empty()) throw DomainError("mixed_volume: empty operand");
        for (const auto& x : op)
            if (x.size() != n) throw DimensionError("mixed_volume: n operands must live in R^n");
    }

    std::vector<PointSet> partial(std::size_t{1} << n);
    Rational total = 0;
    for (std::size_t mask = 1; mask < partial.size(); ++mask) {
        std::size_t low = 0;
        while (!((mask >> low) & 1)) ++low;
        const std::size_t rest = mask & (mask - 1);
        partial[mask] = rest ? minkowski_sum(partial[rest], operands[low]) : extreme_points(operands[low]);
        const int size = __builtin_popcountll(mask);
        const Rational vol = euclidean_volume(partial[mask]);
        if ((n - size) % 2) total -= vol; else total += vol;
    }
    return total;
}

Rational mixed_volume(const std::vector<Polytope>& operands) {
    std::vector<PointSet> sets;
    sets.reserve(operands.size());
    for (const auto& p : operands) sets.push_back(p.vertices());
    return mixed_volume(sets);
}

ProductFormulaReport verify_product_formula(const Polytope& p, const Polytope& q) {
    ProductFormulaReport r;
    r.p_contains_origin = contains(p, zero_vector(p.ambient_dim())) != Location::Outside;
    r.q_contains_origin = contains(q, zero_vector(q.ambient_dim())) != Location::Outside;
    r.vol_p = normalized_volume(p);
    r.vol_q = normalized_volume(q);
    r.vol_sum = normalized_volume(free_sum(p, q).polytope);
    r.holds = r.vol_sum == r.vol_p * r.vol_q;
    return r;
}

}  // namespace freesum
