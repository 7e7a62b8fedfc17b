#ifndef FREESUM_RANDOM_INSTANCES_HPP
#define FREESUM_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "freesum/polytope.hpp"

namespace freesum {

enum class OriginMode { Interior, Boundary, Vertex, AnyContaining };

const char* to_string(OriginMode mode);
std::optional<OriginMode> parse_origin_mode(std::string_view text);

struct RandomInstanceSpec {
    std::size_t ambient_dim = 2;     // 1..4
    std::size_t num_points = 6;      // 3..16
    long coordinate_bound = 3;       // 1..6, coordinates drawn from [-bound, bound]
    OriginMode origin_mode = OriginMode::AnyContaining;
    std::uint64_t seed = 0;
};

inline constexpr int kRandomRetryBudget = 2000;

// Full-dimensional lattice polytope whose position relative to the origin
// matches spec.origin_mode. Deterministic in the spec. Throws DomainError for
// out-of-range specs and Error when the retry budget runs out.
//
// Boundary mode in dimension >= 2 places the origin on the boundary but not
// at a vertex (it is the midpoint of two points on a coordinate hyperplane);
// in dimension 1 the origin is an endpoint.
Polytope gen_random(const RandomInstanceSpec& spec);

// Independent per-trial seed: std::seed_seq over (seed low/high words, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

long uniform_int(std::mt19937_64& rng, long lo, long hi);

// Product of random elementary row operations, a permutation and sign flips.
RatMatrix random_unimodular(std::size_t dim, std::mt19937_64& rng, int steps = 3);

}  // namespace freesum

#endif  // FREESUM_RANDOM_INSTANCES_HPP
