#include "freesum/rational.hpp"

#include <cctype>

#include "freesum/errors.hpp"

namespace freesum {

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer_text(num))
        throw DomainError("malformed rational \"" + std::string(text) + "\"");
    if (slash == std::string_view::npos) return Rational(parse_integer(num));
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw DomainError("malformed rational \"" + std::string(text) + "\"");
    return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const RatVector& v) {
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    return true;
}

bool is_canonical(const Rational& q) {
    if (sgn(q.get_den()) <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1;
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector dimension mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector dimension mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector zero_vector(std::size_t dim) { return RatVector(dim, Rational(0)); }

RatVector integer_vector(std::initializer_list<long> entries) {
    RatVector v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

}  // namespace freesum
