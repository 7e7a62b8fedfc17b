#include "freesum/oracles.hpp"

#include <algorithm>
#include <functional>

#include "freesum/errors.hpp"
#include "freesum/linalg.hpp"
#include "freesum/volume.hpp"

namespace freesum::oracle {

Rational cofactor_det(const RatMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        RatMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            RatVector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][c] * cofactor_det(minor);
        if (c % 2) total -= term; else total += term;
    }
    return total;
}

bool in_hull(const PointSet& points, const RatVector& x) {
    const std::size_t d = x.size();
    std::vector<std::size_t> pick(d + 1);
    if (points.size() < d + 1) return false;
    for (std::size_t k = 0; k <= d; ++k) pick[k] = k;
    while (true) {
        // Barycentric system: sum λ_k p_k = x, sum λ_k = 1.
        RatMatrix a(d + 1, RatVector(d + 1));
        for (std::size_t k = 0; k <= d; ++k) {
            for (std::size_t r = 0; r < d; ++r) a[r][k] = points[pick[k]][r];
            a[d][k] = 1;
        }
        if (cofactor_det(a) != 0) {
            RatVector rhs = x;
            rhs.push_back(1);
            auto lambda = solve(a, rhs);
            if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& l) { return l >= 0; })) return true;
        }
        std::size_t i = d + 1;
        do {
            if (i == 0) return false;
            --i;
        } while (pick[i] == points.size() - (d + 1) + i);
        ++pick[i];
        for (std::size_t j = i + 1; j <= d; ++j) pick[j] = pick[j - 1] + 1;
    }
}

Integer lattice_count(const PointSet& points, unsigned m) {
    // 0P = {0}.
    if (m == 0) return 1;
    const std::size_t d = points.front().size();
    PointSet scaled;
    for (const auto& p : points) scaled.push_back(Rational(m) * p);
    RatVector lo = scaled.front(), hi = scaled.front();
    for (const auto& p : scaled)
        for (std::size_t c = 0; c < d; ++c) {
            lo[c] = std::min(lo[c], p[c]);
            hi[c] = std::max(hi[c], p[c]);
        }
    Integer count = 0;
    RatVector x(d);
    std::function<void(std::size_t)> sweep = [&](std::size_t k) {
        if (k == d) {
            if (in_hull(scaled, x)) ++count;
            return;
        }
        for (Integer v = ceil_of(lo[k]); v <= floor_of(hi[k]); ++v) {
            x[k] = Rational(v);
            sweep(k + 1);
        }
    };
    sweep(0);
    return count;
}

Rational mixed_area_by_interpolation(const PointSet& a, const PointSet& b) {
    auto area = [&](long s, long t) {
        PointSet sum;
        for (const auto& x : a)
            for (const auto& y : b) sum.push_back(Rational(s) * x + Rational(t) * y);
        return euclidean_volume(sum);
    };
    // vol(s A + t B) = α s² + β s t + γ t².
    RatMatrix system{{1, 1, 1}, {1, 2, 4}, {4, 2, 1}};
    auto coeffs = solve(system, {area(1, 1), area(1, 2), area(2, 1)});
    return coeffs[1];
}

}  // namespace freesum::oracle
