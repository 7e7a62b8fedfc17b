#ifndef FREESUM_LINALG_HPP
#define FREESUM_LINALG_HPP

#include <cstddef>
#include <vector>

#include "freesum/rational.hpp"

namespace freesum {

// Exact determinant by fraction-free (Bareiss) elimination. Rows are scaled to
// integers first so that all intermediate quotients are exact integer divisions.
Rational det(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Basis of {x : m x = 0}. Returns an empty list when the kernel is trivial.
std::vector<RatVector> null_space(const RatMatrix& m, std::size_t cols);

// Unique solution of the square system m x = rhs; throws DomainError when m is
// singular.
RatVector solve(const RatMatrix& m, const RatVector& rhs);

RatMatrix identity_matrix(std::size_t n);
RatMatrix transpose(const RatMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatVector multiply(const RatMatrix& m, const RatVector& v);

struct HermiteForm {
    RatMatrix h;  // row-style HNF, zero rows last
    RatMatrix u;  // unimodular, u * input == h
    std::size_t rank = 0;
};

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot). Input entries must be integers (DomainError
// otherwise).
HermiteForm hermite_normal_form(const RatMatrix& m);

}  // namespace freesum

#endif  // FREESUM_LINALG_HPP
