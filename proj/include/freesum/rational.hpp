#ifndef FREESUM_RATIONAL_HPP
#define FREESUM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace freesum {

// Exact scalars. mpq_class keeps every result of its arithmetic in canonical
// form (positive denominator, coprime parts); values built from raw parts must
// go through make_rational / parse_rational.
using Integer = mpz_class;
using Rational = mpq_class;

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;
using PointSet = std::vector<RatVector>;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "a" or "a/b" with optional leading sign. Throws DomainError on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
bool is_integral(const RatVector& v);
bool is_canonical(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

RatVector zero_vector(std::size_t dim);
RatVector integer_vector(std::initializer_list<long> entries);

}  // namespace freesum

#endif  // FREESUM_RATIONAL_HPP
