#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "freesum/ehrhart.hpp"
#include "freesum/harness.hpp"
#include "freesum/io.hpp"
#include "freesum/random_instances.hpp"

using namespace freesum;
using fixtures::as_set;
using fixtures::pt;

TEST_CASE("parse_polytope examples") {
    auto seg = parse_polytope(R"({"ambient_dim":1,"vertices":[["0"],["1"]]})");
    CHECK(as_set(seg.vertices()) == as_set({pt({0}), pt({1})}));

    auto t2 = parse_polytope(R"({"ambient_dim":3,"vertices":[["0","0","0"],["1","0","0"],["0","1","0"],["1","1","2"]]})");
    CHECK(t2.vertices() == fixtures::reeve_points(2));

    std::vector<std::string> warnings;
    auto dup = parse_polytope(R"({"ambient_dim":1,"vertices":[["0"],["1"],["1"]]})", &warnings);
    CHECK(dup.vertices().size() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings.front().find("duplicate") != std::string::npos);

    auto mixed = parse_polytope(R"({"ambient_dim":2,"vertices":[[0,0],["1/2",0],[0,"-3/4"]]})");
    CHECK(mixed.vertices()[1] == RatVector{make_rational(1, 2), 0});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_polytope("{not json"), ParseError);
    CHECK_THROWS_AS(parse_polytope(R"({"ambient_dim":1,"vertices":[["1/0"],["1"]]})"), ParseError);
    CHECK_THROWS_AS(parse_polytope(R"({"ambient_dim":1,"vertices":[["x"],["1"]]})"), ParseError);
    CHECK_THROWS_AS(parse_polytope(R"({"ambient_dim":0,"vertices":[]})"), ValidationError);
    CHECK_THROWS_AS(parse_polytope(R"({"ambient_dim":2,"vertices":[["0","0"],["1","1"]]})"), ValidationError);
    try {
        (void)parse_polytope("{\"ambient_dim\": 2,\n \"vertices\": [\n  [\"0\", \"0\"],\n  [\"1\"]\n]}");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("polytope documents round-trip") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RandomInstanceSpec spec;
        spec.ambient_dim = 1 + seed % 4;
        spec.seed = seed;
        auto p = gen_random(spec);
        auto back = parse_polytope(dump(polytope_json(p), true));
        CHECK(back.vertices() == p.vertices());
    }
}

TEST_CASE("gen_random") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomInstanceSpec spec;
        spec.ambient_dim = 1;
        spec.seed = seed;
        auto p = gen_random(spec);
        CHECK(contains(p, pt({0})) != Location::Outside);
        CHECK(dump(polytope_json(gen_random(spec)), false) == dump(polytope_json(p), false));
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomInstanceSpec spec;
        spec.ambient_dim = 3;
        spec.origin_mode = OriginMode::Boundary;
        spec.seed = seed;
        auto p = gen_random(spec);
        CHECK(contains(p, zero_vector(3)) == Location::Boundary);
        for (const auto& v : p.vertices()) CHECK(v != zero_vector(3));

        spec.origin_mode = OriginMode::Vertex;
        auto q = gen_random(spec);
        CHECK(std::find(q.vertices().begin(), q.vertices().end(), zero_vector(3)) != q.vertices().end());

        spec.origin_mode = OriginMode::Interior;
        CHECK(contains(gen_random(spec), zero_vector(3)) == Location::Interior);
    }
    RandomInstanceSpec bad;
    bad.ambient_dim = 5;
    CHECK_THROWS_AS(gen_random(bad), DomainError);
    CHECK(parse_origin_mode("any-containing") == OriginMode::AnyContaining);
    CHECK_FALSE(parse_origin_mode("sideways").has_value());
}

TEST_CASE("derive_seed is deterministic and separates indices") {
    CHECK(derive_seed(1, 2) == derive_seed(1, 2));
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
    CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("selftest passes and detects an injected fault") {
    HarnessOptions opts;
    opts.trials = 1;
    opts.seed = 2024;
    auto a = run_selftest(opts);
    CHECK(a.ok());
    CHECK(a.suites.size() == 6);
    auto b = run_selftest(opts);
    for (std::size_t i = 0; i < a.suites.size(); ++i) CHECK(a.suites[i].passed == b.suites[i].passed);

    opts.inject_fault = true;
    CHECK_FALSE(run_selftest(opts).ok());
}

TEST_CASE("JSON reports use rational strings") {
    auto j = to_json(ehrhart_data(fixtures::reeve(2)));
    CHECK(j["h_star"] == nlohmann::json::array({1, 0, 1}));
    CHECK(j["ehrhart"][1] == "5/3");
}
