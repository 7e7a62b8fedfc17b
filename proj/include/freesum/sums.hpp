#ifndef FREESUM_SUMS_HPP
#define FREESUM_SUMS_HPP

#include <vector>

#include "freesum/polytope.hpp"

namespace freesum {

struct FreeSum {
    Polytope polytope;
    // Both summands contain their origin, so the construction is a free sum
    // proper and not just conv{P' ∪ Q'}.
    bool is_free_sum = false;
};

// conv{(P,0) ∪ (0,Q)} in R^{m+n}.
FreeSum free_sum(const Polytope& p, const Polytope& q);

// (p, 0) and (0, q) embeddings of vertex/point lists.
PointSet embed_first(const PointSet& points, std::size_t trailing_zeros);
PointSet embed_second(const PointSet& points, std::size_t leading_zeros);

// Extreme points of {a + b}; works for lower-dimensional operands.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);
Polytope minkowski_sum(const Polytope& a, const Polytope& b);

// Maximum number of operands accepted by mixed_volume.
inline constexpr std::size_t kMixedVolumeMaxArity = 6;

// Coefficient of λ1⋯λn in vol(λ1 Q1 + ⋯ + λn Qn), so that MV(Q, …, Q) equals
// the normalized volume of Q. Computed by inclusion–exclusion
//   MV = Σ_{∅≠S⊆[n]} (−1)^{n−|S|} vol(Σ_{i∈S} Q_i).
// Operands are point sets in R^n and may be lower-dimensional.
Rational mixed_volume(const std::vector<PointSet>& operands);
Rational mixed_volume(const std::vector<Polytope>& operands);

struct ProductFormulaReport {
    Rational vol_p;
    Rational vol_q;
    Rational vol_sum;
    bool holds = false;
    bool p_full_dim = true;
    bool q_full_dim = true;
    bool p_contains_origin = false;
    bool q_contains_origin = false;

    bool preconditions_met() const {
        return p_full_dim && q_full_dim && p_contains_origin && q_contains_origin;
    }
};

// Never rejects inputs: the origin hypotheses are evaluated and reported.
ProductFormulaReport verify_product_formula(const Polytope& p, const Polytope& q);

}  // namespace freesum

#endif  // FREESUM_SUMS_HPP
