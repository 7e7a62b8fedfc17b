#ifndef FREESUM_POLYNOMIAL_HPP
#define FREESUM_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "freesum/rational.hpp"

namespace freesum {

// Univariate polynomial with exact coefficients stored in ascending degree.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of t^i; zero beyond the degree.
    Rational coefficient(std::size_t i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& t) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    std::vector<Rational> coeffs_;
};

// Unique polynomial of degree < samples.size() through every (x, y) sample.
// Throws DomainError on repeated abscissae.
Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples);

}  // namespace freesum

#endif  // FREESUM_POLYNOMIAL_HPP
