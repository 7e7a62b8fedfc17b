#include "freesum/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "freesum/bkk.hpp"
#include "freesum/ehrhart.hpp"
#include "freesum/errors.hpp"
#include "freesum/io.hpp"
#include "freesum/linalg.hpp"
#include "freesum/oracles.hpp"
#include "freesum/polynomial.hpp"
#include "freesum/random_instances.hpp"
#include "freesum/sums.hpp"
#include "freesum/volume.hpp"

namespace freesum {

namespace {

using Failure = std::optional<std::string>;
using Check = std::function<Failure(std::uint64_t seed, bool inject)>;

#define HARNESS_EXPECT(cond, msg) \
    do {                          \
        if (!(cond)) return std::string(msg); \
    } while (0)

std::set<RatVector> vertex_set(const Polytope& p) { return {p.vertices().begin(), p.vertices().end()}; }

Polytope random_lattice(std::mt19937_64& rng, std::size_t dim, long bound, OriginMode mode) {
    RandomInstanceSpec spec;
    spec.ambient_dim = dim;
    spec.num_points = static_cast<std::size_t>(uniform_int(rng, static_cast<long>(dim) + 2, static_cast<long>(dim) + 5));
    spec.coordinate_bound = bound;
    spec.origin_mode = mode;
    spec.seed = rng();
    return gen_random(spec);
}

OriginMode pick_mode(std::mt19937_64& rng) {
    static constexpr OriginMode modes[] = {OriginMode::Interior, OriginMode::Boundary, OriginMode::Vertex};
    return modes[uniform_int(rng, 0, 2)];
}

RatMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    RatMatrix m(rows, RatVector(cols));
    for (auto& row : m)
        for (auto& x : row) x = uniform_int(rng, -bound, bound);
    return m;
}

Failure check_rational_linalg(std::uint64_t seed, bool) {
    std::mt19937_64 rng(seed);
    auto m = random_integer_matrix(rng, 4, 4, 5);
    m[1][2] = make_rational(uniform_int(rng, -7, 7), 3);
    const Rational d = det(m);
    HARNESS_EXPECT(is_canonical(d), "det result not canonical");
    HARNESS_EXPECT(d == oracle::cofactor_det(m), "Bareiss det disagrees with cofactor expansion");
    std::swap(m[0], m[3]);
    HARNESS_EXPECT(det(m) == -d, "row swap did not negate det");

    auto a = random_integer_matrix(rng, 3, 4, 6);
    auto hnf = hermite_normal_form(a);
    HARNESS_EXPECT(multiply(hnf.u, a) == hnf.h, "HNF: U*M != H");
    HARNESS_EXPECT(abs(det(hnf.u)) == 1, "HNF: U not unimodular");
    HARNESS_EXPECT(hnf.rank == rank(a), "HNF rank differs from rank()");

    const auto degree = static_cast<std::size_t>(uniform_int(rng, 0, 6));
    std::vector<Rational> coeffs(degree + 1);
    for (auto& c : coeffs) c = make_rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 5));
    coeffs.back() = uniform_int(rng, 1, 4);
    Polynomial f(coeffs);
    std::vector<std::pair<Rational, Rational>> samples;
    for (std::size_t i = 0; i <= degree; ++i) {
        Rational x = make_rational(static_cast<long>(i) - 3, 2);
        samples.emplace_back(x, f(x));
    }
    HARNESS_EXPECT(lagrange_interpolate(samples) == f, "interpolation did not reproduce the polynomial");
    return std::nullopt;
}

Failure check_polytope_core(std::uint64_t seed, bool) {
    std::mt19937_64 rng(seed);
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const Polytope p = random_lattice(rng, dim, 3, OriginMode::AnyContaining);

    HARNESS_EXPECT(vertex_set(convex_hull(p.vertices())) == vertex_set(p), "hull is not idempotent");
    for (const auto& f : p.facets()) {
        PointSet tight;
        for (auto v : f.vertices) tight.push_back(p.vertices()[v]);
        HARNESS_EXPECT(affine_dimension(tight) == static_cast<int>(dim) - 1, "facet not spanned by its vertices");
        for (const auto& v : p.vertices()) HARNESS_EXPECT(f.plane.slack(v) >= 0, "vertex violates a facet");
    }
    for (int k = 0; k < 8; ++k) {
        RatVector x(dim);
        for (auto& c : x) c = make_rational(uniform_int(rng, -8, 8), 2);
        const bool by_facets = contains(p, x) != Location::Outside;
        HARNESS_EXPECT(by_facets == oracle::in_hull(p.vertices(), x), "facet membership disagrees with Caratheodory");
    }

    const Polytope base = uniform_int(rng, 0, 1) ? cube(dim, -1, 1) : cross_polytope(dim);
    const Polytope reflexive = affine_image(base, random_unimodular(dim, rng), zero_vector(dim));
    HARNESS_EXPECT(is_reflexive(reflexive), "unimodular image of a reflexive polytope is not reflexive");
    HARNESS_EXPECT(vertex_set(polar_dual(polar_dual(reflexive))) == vertex_set(reflexive), "dual is not an involution");

    PointSet simplex{zero_vector(dim)};
    for (std::size_t k = 0; k < dim; ++k) {
        RatVector e = zero_vector(dim);
        e[k] = uniform_int(rng, 1, 3);
        simplex.push_back(std::move(e));
    }
    HARNESS_EXPECT(face_lattice(convex_hull(simplex)).size() == (std::size_t{1} << (dim + 1)),
                   "simplex face count is not 2^(d+1)");
    return std::nullopt;
}

Failure check_volume(std::uint64_t seed, bool) {
    std::mt19937_64 rng(seed);
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const Polytope p = random_lattice(rng, dim, 3, OriginMode::AnyContaining);
    const Rational vol = normalized_volume(p);
    HARNESS_EXPECT(is_integer(vol) && vol > 0, "lattice normalized volume is not a positive integer");

    RatVector t(dim);
    for (auto& c : t) c = uniform_int(rng, -5, 5);
    HARNESS_EXPECT(normalized_volume(affine_image(p, identity_matrix(dim), t)) == vol, "translation changed volume");
    HARNESS_EXPECT(normalized_volume(affine_image(p, random_unimodular(dim, rng), zero_vector(dim))) == vol,
                   "unimodular map changed volume");
    RatMatrix doubling = identity_matrix(dim);
    for (std::size_t k = 0; k < dim; ++k) doubling[k][k] = 2;
    HARNESS_EXPECT(normalized_volume(affine_image(p, doubling, zero_vector(dim))) ==
                       vol * (dim == 2 ? 4 : 8),
                   "scaling by 2 did not multiply volume by 2^d");
    Rational other = 0;
    for (const auto& s : triangulate(p, PullOrder::LexMax).simplices)
        other += simplex_normalized_volume(p.vertices(), s);
    HARNESS_EXPECT(other == vol, "two pulling orders give different volumes");
    return std::nullopt;
}

Failure check_ehrhart(std::uint64_t seed, bool) {
    std::mt19937_64 rng(seed);
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const Polytope p = random_lattice(rng, dim, 2, OriginMode::AnyContaining);
    ehrhart_polynomial(p);  // validates against counts at m = d+1..2d
    const auto data = ehrhart_data(p);
    HARNESS_EXPECT(data.h_star.front() == 1, "h*_0 != 1");
    Integer sum = 0;
    for (const auto& h : data.h_star) {
        HARNESS_EXPECT(h >= 0, "negative h*");
        sum += h;
    }
    HARNESS_EXPECT(Rational(sum) == normalized_volume(p), "sum of h* != Vol");
    HARNESS_EXPECT(data.h_star[1] == data.counts[1] - Integer(dim + 1), "h*_1 != L(1) - (d+1)");
    if (dim <= 2)
        HARNESS_EXPECT(lattice_point_count(p, 2) == oracle::lattice_count(p.vertices(), 2),
                       "count disagrees with brute force for " + dump(polytope_json(p), false));
    return std::nullopt;
}

Failure check_sums(std::uint64_t seed, bool inject) {
    std::mt19937_64 rng(seed);
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const Polytope p = random_lattice(rng, m, 3, pick_mode(rng));
    const Polytope q = random_lattice(rng, n, 3, pick_mode(rng));
    auto report = verify_product_formula(p, q);
    if (inject) report.vol_sum += 1;
    HARNESS_EXPECT(report.preconditions_met(), "generator produced a polytope without the origin");
    HARNESS_EXPECT(report.vol_sum == report.vol_p * report.vol_q,
                   "product formula violated: " + to_string(report.vol_sum) + " != " + to_string(report.vol_p) +
                       " * " + to_string(report.vol_q));

    const Polytope a = random_lattice(rng, 2, 2, OriginMode::AnyContaining);
    const Polytope b = random_lattice(rng, 2, 2, OriginMode::AnyContaining);
    const Rational mv = mixed_volume(std::vector<PointSet>{a.vertices(), b.vertices()});
    HARNESS_EXPECT(mv == mixed_volume(std::vector<PointSet>{b.vertices(), a.vertices()}), "MV not symmetric");
    HARNESS_EXPECT(mv == oracle::mixed_area_by_interpolation(a.vertices(), b.vertices()),
                   "MV disagrees with interpolation");
    RatVector shift{uniform_int(rng, -3, 3), uniform_int(rng, -3, 3)};
    HARNESS_EXPECT(mixed_volume(std::vector<Polytope>{affine_image(a, identity_matrix(2), shift), b}) == mv,
                   "MV not translation invariant");
    HARNESS_EXPECT(mixed_volume(std::vector<Polytope>{a, a}) == normalized_volume(a), "MV diagonal != Vol");
    return std::nullopt;
}

Failure check_bkk(std::uint64_t seed, bool) {
    std::mt19937_64 rng(seed);
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const Polytope p = random_lattice(rng, m, 2, pick_mode(rng));
    const Polytope q = random_lattice(rng, n, 2, pick_mode(rng));
    const auto supports = free_sum_supports(p, q);
    const auto cert = certify_mv_equals_vol(supports);
    HARNESS_EXPECT(cert.certificate_passes, "free-sum supports fail the face certificate");
    for (const auto& f : cert.conditions.faces)
        HARNESS_EXPECT(f.verdict == Verdict::A || f.verdict == Verdict::C, "free-sum face classified outside {A, C}");
    const Rational product = normalized_volume(p) * normalized_volume(q);
    HARNESS_EXPECT(cert.vol == normalized_volume(free_sum(p, q).polytope), "certificate volume path mismatch");
    HARNESS_EXPECT(cert.mv == cert.vol && cert.vol == product, "chain Vol = MV = Vol*Vol broken");

    const std::uint64_t system_seed = rng();
    HARNESS_EXPECT(dump(to_json(build_free_sum_system(p, q, system_seed)), false) ==
                       dump(to_json(build_free_sum_system(p, q, system_seed)), false),
                   "system export is not deterministic");
    const SupportSet s(p.vertices());
    HARNESS_EXPECT(bkk_bound(std::vector<SupportSet>(m, s)) == kushnirenko_bound(s), "BKK diagonal != Kushnirenko");
    return std::nullopt;
}

}  // namespace

bool HarnessSummary::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

HarnessSummary run_selftest(const HarnessOptions& options) {
    const std::vector<std::pair<std::string, Check>> suites{
        {"rational_linalg", check_rational_linalg}, {"polytope_core", check_polytope_core},
        {"volume", check_volume},                   {"ehrhart", check_ehrhart},
        {"sums", check_sums},                       {"bkk", check_bkk},
    };
    const auto start = std::chrono::steady_clock::now();
    HarnessSummary summary;
    summary.seed = options.seed;
    summary.trials = options.trials;
    for (const auto& [name, check] : suites) summary.suites.push_back({name, 0, 0, {}});

    for (std::size_t t = 0; t < options.trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(options.seed, t);
        for (std::size_t s = 0; s < suites.size(); ++s) {
            Failure failure;
            try {
                failure = suites[s].second(derive_seed(trial_seed, s), options.inject_fault);
            } catch (const std::exception& e) {
                failure = std::string("exception: ") + e.what();
            }
            auto& result = summary.suites[s];
            if (!failure) {
                ++result.passed;
                continue;
            }
            ++result.failed;
            if (result.failures.size() < 5)
                result.failures.push_back("trial " + std::to_string(t) + ": " + *failure);
        }
    }
    summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

}  // namespace freesum
