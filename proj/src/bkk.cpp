#include "freesum/bkk.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>

#include "freesum/errors.hpp"
#include "freesum/sums.hpp"
#include "freesum/volume.hpp"

namespace freesum {

namespace {

std::vector<PointSet> point_sets(const std::vector<SupportSet>& supports) {
    std::vector<PointSet> sets;
    sets.reserve(supports.size());
    for (const auto& s : supports) sets.push_back(s.exponents());
    return sets;
}

std::size_t common_dimension(const std::vector<SupportSet>& supports) {
    if (supports.empty()) throw DomainError("at least one support set is required");
    const std::size_t n = supports.front().ambient_dim();
    for (const auto& s : supports)
        if (s.ambient_dim() != n) throw DimensionError("support sets live in different dimensions");
    return n;
}

// Next k-subset of {0..n-1} in lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

SupportSet::SupportSet(const PointSet& exponents) {
    if (exponents.empty()) throw DomainError("support set is empty");
    const std::size_t n = exponents.front().size();
    if (n == 0) throw DimensionError("support exponents must have dimension >= 1");
    std::set<RatVector> seen;
    for (const auto& a : exponents) {
        if (a.size() != n) throw DimensionError("support exponents have mixed dimensions");
        if (!is_integral(a)) throw DomainError("support exponents must be integers");
        if (seen.insert(a).second) exponents_.push_back(a);
    }
}

Polytope newton_polytope(const SupportSet& s) { return convex_hull(s.exponents()); }

Rational kushnirenko_bound(const SupportSet& s) { return normalized_volume(newton_polytope(s)); }

Rational bkk_bound(const std::vector<SupportSet>& supports) {
    const std::size_t n = common_dimension(supports);
    if (supports.size() != n) throw DimensionError("bkk_bound needs exactly n supports in Z^n");
    return mixed_volume(point_sets(supports));
}

double draw_coefficient(std::uint64_t raw) {
    return 2.0 * static_cast<double>(raw >> 11) * 0x1.0p-53 - 1.0;
}

std::string format_coefficient(double c) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, c);
    return std::string(buf, res.ptr);
}

LaurentSystem build_free_sum_system(const Polytope& p, const Polytope& q, std::uint64_t seed) {
    if (!p.is_lattice() || !q.is_lattice()) throw DomainError("build_free_sum_system requires lattice polytopes");
    const std::size_t m = p.ambient_dim(), n = q.ambient_dim();
    LaurentSystem sys;
    sys.seed = seed;
    for (std::size_t i = 1; i <= m; ++i) sys.variables.push_back("x" + std::to_string(i));
    for (std::size_t j = 1; j <= n; ++j) sys.variables.push_back("y" + std::to_string(j));

    std::mt19937_64 rng(seed);
    auto coefficient = [&rng] {
        double c;
        do c = draw_coefficient(rng()); while (c == 0.0);
        return c;
    };
    auto emit = [&](const PointSet& support, std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            LaurentPolynomial poly;
            for (const auto& a : support) {
                LaurentTerm t;
                t.coeff = coefficient();
                for (const auto& e : a) t.exponents.push_back(e.get_num());
                poly.terms.push_back(std::move(t));
            }
            sys.polynomials.push_back(std::move(poly));
        }
    };
    emit(embed_first(p.vertices(), n), m);
    emit(embed_second(q.vertices(), m), n);
    return sys;
}

std::vector<SupportSet> free_sum_supports(const Polytope& p, const Polytope& q) {
    const std::size_t m = p.ambient_dim(), n = q.ambient_dim();
    const SupportSet s_prime(embed_first(p.vertices(), n));
    const SupportSet t_prime(embed_second(q.vertices(), m));
    std::vector<SupportSet> out(m, s_prime);
    out.insert(out.end(), n, t_prime);
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::A: return "A";
        case Verdict::B: return "B";
        case Verdict::C: return "C";
        case Verdict::Fail: return "FAIL";
    }
    return "?";
}

bool FaceConditionReport::passes() const {
    return std::none_of(faces.begin(), faces.end(),
                        [](const FaceClassification& f) { return f.verdict == Verdict::Fail; });
}

FaceConditionReport check_face_conditions(const std::vector<SupportSet>& supports) {
    const std::size_t n = common_dimension(supports);
    PointSet all;
    for (const auto& s : supports) all.insert(all.end(), s.exponents().begin(), s.exponents().end());
    const Polytope hull = convex_hull(all);

    FaceConditionReport report;
    report.hull_vertices = hull.vertices();
    for (auto& face : face_lattice(hull)) {
        if (face.dim < 1 || face.dim >= static_cast<int>(n)) continue;

        std::vector<const Hyperplane*> tight;
        for (const auto& f : hull.facets())
            if (std::includes(f.vertices.begin(), f.vertices.end(), face.vertices.begin(), face.vertices.end()))
                tight.push_back(&f.plane);
        auto on_face = [&](const RatVector& x) {
            return std::all_of(tight.begin(), tight.end(), [&](const Hyperplane* h) { return h->slack(x) == 0; });
        };

        FaceClassification fc;
        std::vector<const RatVector*> met_points;
        std::size_t met_sets = 0;
        for (const auto& s : supports) {
            std::size_t count = 0;
            for (const auto& x : s.exponents())
                if (on_face(x)) {
                    ++count;
                    met_points.push_back(&x);
                }
            fc.intersection_sizes.push_back(count);
            if (count) ++met_sets;
        }

        if (met_sets == supports.size()) {
            fc.verdict = Verdict::A;
        } else if (std::find(fc.intersection_sizes.begin(), fc.intersection_sizes.end(), 1u) !=
                   fc.intersection_sizes.end()) {
            fc.verdict = Verdict::B;
        } else if (met_sets > 0 && met_sets <= n) {
            std::vector<std::size_t> coords(met_sets);
            for (std::size_t k = 0; k < met_sets; ++k) coords[k] = k;
            do {
                std::vector<bool> in_j(n, false);
                for (auto c : coords) in_j[c] = true;
                bool supported = std::all_of(met_points.begin(), met_points.end(), [&](const RatVector* x) {
                    for (std::size_t c = 0; c < n; ++c)
                        if (!in_j[c] && (*x)[c] != 0) return false;
                    return true;
                });
                if (!supported) continue;
                PointSet projected;
                for (auto v : face.vertices) {
                    RatVector y;
                    for (auto c : coords) y.push_back(hull.vertices()[v][c]);
                    projected.push_back(std::move(y));
                }
                if (affine_dimension(projected) < static_cast<int>(met_sets)) {
                    fc.verdict = Verdict::C;
                    fc.witness = coords;
                    break;
                }
            } while (next_combination(coords, n));
        }
        fc.face = std::move(face);
        report.faces.push_back(std::move(fc));
    }
    return report;
}

CertificateReport certify_mv_equals_vol(const std::vector<SupportSet>& supports) {
    const std::size_t n = common_dimension(supports);
    if (supports.size() != n) throw DimensionError("certify_mv_equals_vol needs exactly n supports in Z^n");
    CertificateReport r;
    r.conditions = check_face_conditions(supports);
    r.certificate_passes = r.conditions.passes();
    r.mv = mixed_volume(point_sets(supports));
    r.vol = normalized_volume(convex_hull(r.conditions.hull_vertices));
    r.equal = r.mv == r.vol;
    return r;
}

}  // namespace freesum
