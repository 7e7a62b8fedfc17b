#ifndef FREESUM_EHRHART_HPP
#define FREESUM_EHRHART_HPP

#include <cstdint>
#include <vector>

#include "freesum/polynomial.hpp"
#include "freesum/polytope.hpp"

namespace freesum {

// Maximum number of integer points in the dilated bounding box swept by a
// single lattice_point_count call.
inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

// |mP ∩ Z^n| by sweeping the integer bounding box of mP against the facet
// inequalities. m = 0 gives 1. Throws DomainError for non-lattice P and
// BudgetExceededError when the box is larger than `budget`.
Integer lattice_point_count(const Polytope& p, unsigned m, std::uint64_t budget = kDefaultPointBudget);

struct EhrhartData {
    std::size_t dim = 0;
    std::vector<Integer> counts;  // L_P(0..dim)
    Polynomial ehrhart;           // degree dim
    std::vector<Integer> h_star;  // length dim+1, trailing zeros kept
};

// Counts for m = 0..d, interpolated Ehrhart polynomial and the h*-vector from
// h*_i = sum_j (-1)^j C(d+1, j) L(i-j). Invariants (h*_0 = 1, h*_i >= 0,
// sum h* = Vol, leading coefficient = vol) are checked and violations raise
// InternalConsistencyError.
EhrhartData ehrhart_data(const Polytope& p, std::uint64_t budget = kDefaultPointBudget);

// Checks data.ehrhart against direct counts at m = d+1..2d; a mismatch raises
// InternalConsistencyError.
void validate_ehrhart_polynomial(const Polytope& p, const EhrhartData& data,
                                 std::uint64_t budget = kDefaultPointBudget);

// ehrhart_data(p).ehrhart after validate_ehrhart_polynomial.
Polynomial ehrhart_polynomial(const Polytope& p, std::uint64_t budget = kDefaultPointBudget);

std::vector<Integer> h_star_vector(const Polytope& p, std::uint64_t budget = kDefaultPointBudget);

std::vector<Integer> trim_trailing_zeros(std::vector<Integer> v);

// Coefficient-wise product of two integer coefficient vectors.
std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b);

struct BraunReport {
    std::vector<Integer> h_p;      // trimmed
    std::vector<Integer> h_q;      // trimmed
    std::vector<Integer> product;  // h*_P(t) h*_Q(t), trimmed
    std::vector<Integer> direct;   // h*(P ⊕ Q), trimmed
    bool equal = false;
    bool p_reflexive = false;
    bool q_origin_interior = false;
    bool hypotheses_met() const { return p_reflexive && q_origin_interior; }
};

// Runs even when the hypotheses fail; the report flags them.
BraunReport braun_check(const Polytope& p, const Polytope& q, std::uint64_t budget = kDefaultPointBudget);

}  // namespace freesum

#endif  // FREESUM_EHRHART_HPP
