#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "freesum/bkk.hpp"
#include "freesum/errors.hpp"
#include "freesum/io.hpp"
#include "freesum/random_instances.hpp"
#include "freesum/sums.hpp"
#include "freesum/volume.hpp"

using namespace freesum;
using fixtures::as_set;
using fixtures::pt;

TEST_CASE("SupportSet validation") {
    CHECK(SupportSet({pt({0, 0}), pt({0, 0}), pt({1, 0})}).exponents().size() == 2);
    CHECK_THROWS_AS(SupportSet(PointSet{}), DomainError);
    CHECK_THROWS_AS(SupportSet({pt({0}), pt({0, 1})}), DimensionError);
    CHECK_THROWS_AS(SupportSet({{make_rational(1, 2)}}), DomainError);
}

TEST_CASE("newton_polytope") {
    CHECK(as_set(newton_polytope(SupportSet({pt({0}), pt({1}), pt({2})})).vertices()) == as_set({pt({0}), pt({2})}));
    CHECK(as_set(newton_polytope(SupportSet(fixtures::reeve_points(2))).vertices()) ==
          as_set(fixtures::reeve_points(2)));
    CHECK(as_set(newton_polytope(SupportSet(fixtures::unit_square().vertices())).vertices()) ==
          as_set(fixtures::unit_square().vertices()));
    CHECK_THROWS_AS(newton_polytope(SupportSet({pt({0, 0}), pt({1, 1})})), LowerDimensionalError);
}

TEST_CASE("kushnirenko_bound and bkk_bound") {
    CHECK(kushnirenko_bound(SupportSet({pt({0}), pt({1})})) == 1);
    CHECK(kushnirenko_bound(SupportSet(fixtures::reeve_points(2))) == 2);
    CHECK(kushnirenko_bound(SupportSet(fixtures::unit_square().vertices())) == 2);

    SupportSet sq(fixtures::unit_square().vertices());
    SupportSet tri(fixtures::unit_triangle());
    CHECK(bkk_bound({sq, tri}) == 2);
    CHECK(bkk_bound({SupportSet({pt({0, 0}), pt({1, 0})}), SupportSet({pt({0, 0}), pt({0, 1})})}) == 1);
    CHECK_THROWS_AS(bkk_bound({sq}), DimensionError);

    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 10; ++trial) {
        RandomInstanceSpec spec;
        spec.ambient_dim = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        spec.num_points = 6;
        spec.seed = rng();
        SupportSet s(gen_random(spec).vertices());
        CHECK(bkk_bound(std::vector<SupportSet>(spec.ambient_dim, s)) == kushnirenko_bound(s));
    }
}

TEST_CASE("coefficient draws stay in [-1, 1) and round-trip") {
    CHECK(draw_coefficient(0) == -1.0);
    CHECK(draw_coefficient(~std::uint64_t{0}) < 1.0);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        double c = draw_coefficient(rng());
        CHECK(c >= -1.0);
        CHECK(c < 1.0);
        CHECK(std::stod(format_coefficient(c)) == c);
    }
}

TEST_CASE("build_free_sum_system structure") {
    auto seg = cube(1, 0, 1);
    auto sys = build_free_sum_system(seg, seg, 42);
    CHECK(sys.seed == 42);
    CHECK(sys.variables == std::vector<std::string>{"x1", "y1"});
    REQUIRE(sys.polynomials.size() == 2);
    std::set<std::vector<Integer>> f, g;
    for (const auto& t : sys.polynomials[0].terms) f.insert(t.exponents);
    for (const auto& t : sys.polynomials[1].terms) g.insert(t.exponents);
    CHECK(f == std::set<std::vector<Integer>>{{0, 0}, {1, 0}});
    CHECK(g == std::set<std::vector<Integer>>{{0, 0}, {0, 1}});

    auto t2 = fixtures::reeve(2);
    auto big = build_free_sum_system(t2, t2, 7);
    CHECK(big.num_vars() == 6);
    REQUIRE(big.polynomials.size() == 6);
    for (const auto& poly : big.polynomials) {
        CHECK(poly.terms.size() == 4);
        for (const auto& t : poly.terms) {
            CHECK(t.exponents.size() == 6);
            CHECK(t.coeff != 0.0);
        }
    }

    CHECK(dump(to_json(build_free_sum_system(t2, t2, 99)), false) ==
          dump(to_json(build_free_sum_system(t2, t2, 99)), false));
    CHECK(dump(to_json(build_free_sum_system(t2, t2, 99)), false) !=
          dump(to_json(build_free_sum_system(t2, t2, 100)), false));
}

TEST_CASE("check_face_conditions examples") {
    SupportSet s(fixtures::reeve_points(2));
    auto diag = check_face_conditions({s, s, s});
    CHECK(diag.passes());
    CHECK(!diag.faces.empty());
    for (const auto& f : diag.faces) CHECK(f.verdict == Verdict::A);

    auto t2 = fixtures::reeve(2);
    auto fs = check_face_conditions(free_sum_supports(t2, t2));
    CHECK(fs.passes());
    bool saw_first_block = false;
    for (const auto& f : fs.faces) {
        CHECK((f.verdict == Verdict::A || f.verdict == Verdict::C));
        const bool misses_t = f.intersection_sizes[3] == 0;
        const bool meets_s = f.intersection_sizes[0] > 0;
        if (meets_s && misses_t) {
            CHECK(f.verdict == Verdict::C);
            CHECK(f.witness == std::vector<std::size_t>{0, 1, 2});
            saw_first_block = true;
        }
    }
    CHECK(saw_first_block);

    auto bad = check_face_conditions({SupportSet({pt({3, 0}), pt({4, 0})}), SupportSet({pt({0, 0}), pt({0, 1})})});
    CHECK_FALSE(bad.passes());
}

TEST_CASE("certify_mv_equals_vol examples") {
    auto t2 = fixtures::reeve(2);
    auto a = certify_mv_equals_vol(free_sum_supports(t2, t2));
    CHECK(a.certificate_passes);
    CHECK(a.mv == 4);
    CHECK(a.vol == 4);
    CHECK(a.equal);

    SupportSet sq(fixtures::unit_square().vertices());
    auto b = certify_mv_equals_vol({sq, sq});
    CHECK(b.certificate_passes);
    CHECK(b.mv == 2);
    CHECK(b.vol == 2);

    auto c = certify_mv_equals_vol({SupportSet({pt({3, 0}), pt({4, 0})}), SupportSet({pt({0, 0}), pt({0, 1})})});
    CHECK_FALSE(c.certificate_passes);
    CHECK(c.mv == 1);
    CHECK(c.vol == 4);
    CHECK_FALSE(c.equal);
}

TEST_CASE("certificate is sound on random support families") {
    std::mt19937_64 rng(91);
    int passing = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        std::vector<SupportSet> family;
        for (std::size_t i = 0; i < n; ++i) {
            PointSet pts;
            const long k = uniform_int(rng, 1, 4);
            for (long j = 0; j < k; ++j) {
                RatVector x(n);
                for (auto& c : x) c = uniform_int(rng, 0, 2);
                pts.push_back(x);
            }
            family.emplace_back(pts);
        }
        PointSet all;
        for (const auto& s : family) all.insert(all.end(), s.exponents().begin(), s.exponents().end());
        if (affine_dimension(all) != static_cast<int>(n)) continue;
        auto r = certify_mv_equals_vol(family);
        if (r.certificate_passes) {
            ++passing;
            CHECK(r.mv == r.vol);
        }
        CHECK(r.mv <= r.vol);
    }
    CHECK(passing > 0);
}
