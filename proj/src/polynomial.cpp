#include "freesum/polynomial.hpp"

#include <algorithm>

#include "freesum/errors.hpp"

namespace freesum {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples) {
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (samples[i].first == samples[j].first)
                throw DomainError("lagrange_interpolate: duplicate abscissa " + to_string(samples[i].first));

    Polynomial result;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial basis(std::vector<Rational>{Rational(1)});
        Rational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = basis * Polynomial(std::vector<Rational>{-samples[j].first, Rational(1)});
            denom *= samples[i].first - samples[j].first;
        }
        result = result + Polynomial(std::vector<Rational>{samples[i].second / denom}) * basis;
    }
    return result;
}

}  // namespace freesum
