#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "freesum/errors.hpp"
#include "freesum/linalg.hpp"
#include "freesum/oracles.hpp"
#include "freesum/polytope.hpp"
#include "freesum/random_instances.hpp"

using namespace freesum;
using fixtures::as_set;
using fixtures::pt;

TEST_CASE("convex_hull drops interior points") {
    auto p = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}), {make_rational(1, 2), make_rational(1, 2)}});
    CHECK(as_set(p.vertices()) == as_set({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}));
    CHECK(p.facets().size() == 4);
}

TEST_CASE("convex_hull of T2 keeps all four points") {
    auto p = fixtures::reeve(2);
    CHECK(p.vertices() == fixtures::reeve_points(2));
    CHECK(p.facets().size() == 4);
}

TEST_CASE("convex_hull of the planar cross-polytope has facets +-x+-y <= 1") {
    auto p = convex_hull({pt({1, 0}), pt({-1, 0}), pt({0, 1}), pt({0, -1})});
    CHECK(p.vertices().size() == 4);
    REQUIRE(p.facets().size() == 4);
    std::set<RatVector> normals;
    for (const auto& f : p.facets()) {
        CHECK(f.plane.offset == 1);
        normals.insert(f.plane.normal);
    }
    CHECK(normals == std::set<RatVector>{pt({1, 1}), pt({1, -1}), pt({-1, 1}), pt({-1, -1})});
}

TEST_CASE("convex_hull rejects lower-dimensional input with its affine dimension") {
    try {
        (void)convex_hull({pt({0, 0}), pt({1, 1}), pt({2, 2})});
        FAIL("expected LowerDimensionalError");
    } catch (const LowerDimensionalError& e) {
        CHECK(e.affine_dim() == 1);
    }
}

TEST_CASE("convex_hull handles non-simplicial facets") {
    auto c = cube(3, 0, 1);
    CHECK(c.vertices().size() == 8);
    REQUIRE(c.facets().size() == 6);
    for (const auto& f : c.facets()) CHECK(f.vertices.size() == 4);

    auto oct = cross_polytope(3);
    CHECK(oct.vertices().size() == 6);
    CHECK(oct.facets().size() == 8);

    auto c4 = cube(4, -1, 1);
    CHECK(c4.vertices().size() == 16);
    CHECK(c4.facets().size() == 8);
}

TEST_CASE("affine_dimension") {
    CHECK(affine_dimension({pt({3, 3})}) == 0);
    CHECK(affine_dimension({pt({0, 0}), pt({1, 0}), pt({2, 0})}) == 1);
    CHECK(affine_dimension(fixtures::reeve_points(2)) == 3);
    CHECK(affine_dimension({}) == -1);
}

TEST_CASE("contains") {
    auto sq = fixtures::unit_square();
    CHECK(contains(sq, {make_rational(1, 2), make_rational(1, 2)}) == Location::Interior);
    CHECK(contains(sq, {0, make_rational(1, 2)}) == Location::Boundary);
    CHECK(contains(sq, pt({2, 0})) == Location::Outside);
    CHECK(contains(fixtures::reeve(2), pt({0, 0, 0})) == Location::Boundary);
}

TEST_CASE("face_lattice counts") {
    CHECK(face_lattice(convex_hull(fixtures::unit_triangle())).size() == 8);
    CHECK(face_lattice(fixtures::reeve(2)).size() == 16);
    auto sq = face_lattice(fixtures::unit_square());
    CHECK(sq.size() == 10);
    CHECK(sq.front().dim == -1);
    CHECK(sq.front().vertices.empty());
    CHECK(sq.back().dim == 2);
    CHECK(sq.back().vertices.size() == 4);
    // 3-cube: 1 + 8 + 12 + 6 + 1.
    CHECK(face_lattice(cube(3, 0, 1)).size() == 28);
}

TEST_CASE("polar_dual") {
    auto sq = cube(2, -1, 1);
    auto cross = cross_polytope(2);
    CHECK(as_set(polar_dual(sq).vertices()) == as_set(cross.vertices()));
    CHECK(as_set(polar_dual(cross).vertices()) == as_set(sq.vertices()));
    CHECK_THROWS_AS(polar_dual(fixtures::reeve(2)), UnboundedDualError);
}

TEST_CASE("is_reflexive") {
    CHECK(is_reflexive(cube(2, -1, 1)));
    CHECK(is_reflexive(cross_polytope(2)));
    CHECK_FALSE(is_reflexive(fixtures::reeve(2)));
    CHECK_FALSE(is_reflexive(cube(2, -2, 2)));
    CHECK_THROWS_AS(is_reflexive(convex_hull({pt({-1}), {make_rational(1, 2)}})), DomainError);
}

TEST_CASE("random hulls: vertices and facets agree with the Caratheodory oracle") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto d = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        PointSet pts;
        while (pts.size() < d + 1 || affine_dimension(pts) != static_cast<int>(d)) {
            RatVector x(d);
            for (auto& c : x) c = uniform_int(rng, -3, 3);
            pts.push_back(x);
        }
        for (int extra = 0; extra < 4; ++extra) {
            RatVector x(d);
            for (auto& c : x) c = uniform_int(rng, -3, 3);
            pts.push_back(x);
        }
        auto p = convex_hull(pts);
        // Every input point satisfies every facet; each vertex is not in the
        // hull of the others.
        for (const auto& x : pts)
            for (const auto& f : p.facets()) CHECK(f.plane.slack(x) >= 0);
        for (std::size_t i = 0; i < p.vertices().size(); ++i) {
            PointSet others;
            for (std::size_t j = 0; j < p.vertices().size(); ++j)
                if (j != i) others.push_back(p.vertices()[j]);
            if (affine_dimension(others) == static_cast<int>(d)) CHECK_FALSE(oracle::in_hull(others, p.vertices()[i]));
        }
        // Each facet has d affinely independent vertices and they lie on it.
        for (const auto& f : p.facets()) {
            PointSet on;
            for (auto idx : f.vertices) {
                CHECK(f.plane.slack(p.vertices()[idx]) == 0);
                on.push_back(p.vertices()[idx]);
            }
            CHECK(affine_dimension(on) == static_cast<int>(d) - 1);
        }
        // Hull is idempotent on its own vertices.
        CHECK(as_set(convex_hull(p.vertices()).vertices()) == as_set(p.vertices()));
    }
}

TEST_CASE("face lattice is closed under intersection and satisfies Euler's relation") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        RandomInstanceSpec spec;
        spec.ambient_dim = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        spec.num_points = 8;
        spec.seed = rng();
        auto p = gen_random(spec);
        auto faces = face_lattice(p);
        std::set<std::vector<std::size_t>> sets;
        std::map<int, long> f_vector;
        for (const auto& f : faces) {
            sets.insert(f.vertices);
            ++f_vector[f.dim];
        }
        CHECK(sets.size() == faces.size());
        for (const auto& a : faces)
            for (const auto& b : faces) {
                std::vector<std::size_t> meet;
                std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                                      std::back_inserter(meet));
                CHECK(sets.count(meet) == 1);
            }
        long euler = 0;
        for (int k = 0; k < static_cast<int>(spec.ambient_dim); ++k) euler += (k % 2 == 0 ? 1 : -1) * f_vector[k];
        CHECK(euler == (spec.ambient_dim % 2 == 1 ? 2 : 0));
    }
}

TEST_CASE("polar dual is an involution for origin-interior polytopes") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 15; ++trial) {
        RandomInstanceSpec spec;
        spec.ambient_dim = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        spec.num_points = 7;
        spec.origin_mode = OriginMode::Interior;
        spec.seed = rng();
        auto p = gen_random(spec);
        CHECK(contains(p, zero_vector(spec.ambient_dim)) == Location::Interior);
        auto back = polar_dual(polar_dual(p));
        CHECK(as_set(back.vertices()) == as_set(p.vertices()));
    }
}

TEST_CASE("affine_image under a unimodular map preserves reflexivity") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto u = random_unimodular(3, rng);
        CHECK(abs(det(u)) == 1);
        CHECK(is_reflexive(affine_image(cube(3, -1, 1), u, zero_vector(3))));
        CHECK(is_reflexive(affine_image(cross_polytope(3), u, zero_vector(3))));
    }
}
