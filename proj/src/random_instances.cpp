#include "freesum/random_instances.hpp"

#include <algorithm>

#include "freesum/errors.hpp"

namespace freesum {

const char* to_string(OriginMode mode) {
    switch (mode) {
        case OriginMode::Interior: return "interior";
        case OriginMode::Boundary: return "boundary";
        case OriginMode::Vertex: return "vertex";
        case OriginMode::AnyContaining: return "any-containing";
    }
    return "?";
}

std::optional<OriginMode> parse_origin_mode(std::string_view text) {
    for (auto mode : {OriginMode::Interior, OriginMode::Boundary, OriginMode::Vertex, OriginMode::AnyContaining})
        if (text == to_string(mode)) return mode;
    return std::nullopt;
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

RatMatrix random_unimodular(std::size_t dim, std::mt19937_64& rng, int steps) {
    RatMatrix u(dim, zero_vector(dim));
    for (std::size_t i = 0; i < dim; ++i) u[i][i] = 1;
    if (dim > 1) {
        for (int s = 0; s < steps; ++s) {
            auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(dim) - 1));
            auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(dim) - 2));
            if (j >= i) ++j;
            const Rational factor = uniform_int(rng, 0, 1) ? 1 : -1;
            for (std::size_t c = 0; c < dim; ++c) u[i][c] += factor * u[j][c];
        }
    }
    for (std::size_t i = dim; i-- > 1;) {
        auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(i)));
        std::swap(u[i], u[j]);
    }
    for (auto& row : u)
        if (uniform_int(rng, 0, 1))
            for (auto& x : row) x = -x;
    return u;
}

namespace {

RatVector random_point(std::mt19937_64& rng, std::size_t dim, long bound) {
    RatVector v(dim);
    for (auto& x : v) x = uniform_int(rng, -bound, bound);
    return v;
}

std::optional<Polytope> attempt(const RandomInstanceSpec& spec, std::mt19937_64& rng) {
    const std::size_t d = spec.ambient_dim;
    const long b = spec.coordinate_bound;
    PointSet pts;
    if (spec.origin_mode == OriginMode::Boundary) {
        const auto axis = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(d) - 1));
        const long sign = uniform_int(rng, 0, 1) ? 1 : -1;
        if (d == 1) {
            pts.push_back(zero_vector(1));
        } else {
            RatVector p = random_point(rng, d, b);
            p[axis] = 0;
            if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; })) return std::nullopt;
            pts.push_back(p);
            pts.push_back(Rational(-1) * p);
        }
        while (pts.size() < spec.num_points) {
            RatVector p = random_point(rng, d, b);
            p[axis] = sign * uniform_int(rng, 0, b);
            pts.push_back(std::move(p));
        }
    } else {
        if (spec.origin_mode == OriginMode::Vertex) pts.push_back(zero_vector(d));
        while (pts.size() < spec.num_points) pts.push_back(random_point(rng, d, b));
    }
    if (affine_dimension(pts) < static_cast<int>(d)) return std::nullopt;
    Polytope p = convex_hull(pts);
    const RatVector origin = zero_vector(d);
    const Location loc = contains(p, origin);
    switch (spec.origin_mode) {
        case OriginMode::Interior:
            if (loc != Location::Interior) return std::nullopt;
            break;
        case OriginMode::Boundary:
            if (loc != Location::Boundary) return std::nullopt;
            break;
        case OriginMode::Vertex:
            if (std::find(p.vertices().begin(), p.vertices().end(), origin) == p.vertices().end()) return std::nullopt;
            break;
        case OriginMode::AnyContaining:
            if (loc == Location::Outside) return std::nullopt;
            break;
    }
    return p;
}

}  // namespace

Polytope gen_random(const RandomInstanceSpec& spec) {
    if (spec.ambient_dim < 1 || spec.ambient_dim > 4) throw DomainError("ambient_dim must be in 1..4");
    if (spec.num_points < 3 || spec.num_points > 16) throw DomainError("num_points must be in 3..16");
    if (spec.coordinate_bound < 1 || spec.coordinate_bound > 6) throw DomainError("coordinate_bound must be in 1..6");
    std::mt19937_64 rng(spec.seed);
    for (int attempt_no = 0; attempt_no < kRandomRetryBudget; ++attempt_no)
        if (auto p = attempt(spec, rng)) return std::move(*p);
    throw Error("gen_random: retry budget of " + std::to_string(kRandomRetryBudget) +
                " attempts exhausted for this spec");
}

}  // namespace freesum
