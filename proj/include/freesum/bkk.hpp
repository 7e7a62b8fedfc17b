#ifndef FREESUM_BKK_HPP
#define FREESUM_BKK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "freesum/polytope.hpp"

namespace freesum {

// Exponent set of a Laurent polynomial. Nonempty, integral, duplicates
// removed (first occurrence kept).
class SupportSet {
public:
    explicit SupportSet(const PointSet& exponents);

    std::size_t ambient_dim() const { return exponents_.front().size(); }
    const PointSet& exponents() const { return exponents_; }

private:
    PointSet exponents_;
};

// Throws LowerDimensionalError when conv(S) is not full-dimensional.
Polytope newton_polytope(const SupportSet& s);

// n! vol(conv S).
Rational kushnirenko_bound(const SupportSet& s);

// Mixed volume of the Newton polytopes of n supports in Z^n.
Rational bkk_bound(const std::vector<SupportSet>& supports);

struct LaurentTerm {
    double coeff = 0;
    std::vector<Integer> exponents;
};

struct LaurentPolynomial {
    std::vector<LaurentTerm> terms;
};

struct LaurentSystem {
    std::uint64_t seed = 0;
    std::vector<std::string> variables;
    std::vector<LaurentPolynomial> polynomials;

    std::size_t num_vars() const { return variables.size(); }
};

// Uniform draw from [-1, 1) \ {0} using the top 53 bits of one std::mt19937_64
// output: 2 * (x >> 11) * 2^-53 - 1. Zero is redrawn.
double draw_coefficient(std::uint64_t raw);

// Shortest decimal string that parses back to the same double.
std::string format_coefficient(double c);

// The system H(x, y) = (f_1..f_m, g_1..g_n): every f_i has support S' (the
// vertices of P embedded as (a, 0)), every g_j has support T'. Coefficients
// come from std::mt19937_64(seed), drawn term by term in polynomial order.
LaurentSystem build_free_sum_system(const Polytope& p, const Polytope& q, std::uint64_t seed);

// (S', ..., S', T', ..., T') with m copies of S' and n copies of T'.
std::vector<SupportSet> free_sum_supports(const Polytope& p, const Polytope& q);

enum class Verdict { A, B, C, Fail };

const char* to_string(Verdict v);

struct FaceClassification {
    Face face;                                // indices into FaceConditionReport::hull_vertices
    std::vector<std::size_t> intersection_sizes;  // |F ∩ S_i| for each i
    Verdict verdict = Verdict::Fail;
    std::vector<std::size_t> witness;         // coordinate subset J (0-based) for verdict C
};

struct FaceConditionReport {
    PointSet hull_vertices;  // vertices of conv(S_1 ∪ ... ∪ S_k)
    std::vector<FaceClassification> faces;  // positive-dimensional proper faces, sorted by (dim, vertices)

    bool passes() const;
};

// Classifies each positive-dimensional proper face of conv(∪ S_i):
//   A  F meets every S_i;
//   B  some F ∩ S_i is a single point;
//   C  with I = {i : F ∩ S_i ≠ ∅}, some coordinate subset J with |J| = |I|
//      supports every point of every F ∩ S_i, and F projected onto J has
//      affine dimension < |I|.
// First matching condition in the order A, B, C wins.
FaceConditionReport check_face_conditions(const std::vector<SupportSet>& supports);

struct CertificateReport {
    FaceConditionReport conditions;
    bool certificate_passes = false;
    Rational mv;   // MV(conv S_1, ..., conv S_n) by inclusion–exclusion
    Rational vol;  // Vol(conv ∪ S_i) by triangulation
    bool equal = false;
};

CertificateReport certify_mv_equals_vol(const std::vector<SupportSet>& supports);

}  // namespace freesum

#endif  // FREESUM_BKK_HPP
