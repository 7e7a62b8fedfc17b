#include "freesum/linalg.hpp"

#include <algorithm>
#include <utility>

#include "freesum/errors.hpp"

namespace freesum {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

std::size_t column_count(const RatMatrix& m) {
    if (m.empty()) return 0;
    std::size_t cols = m.front().size();
    for (const auto& row : m)
        if (row.size() != cols) throw DimensionError("matrix rows have unequal length");
    return cols;
}

// Scales every row by the lcm of its denominators. The product of the scale
// factors is returned so that det can undo it.
IntMatrix integer_rows(const RatMatrix& m, Integer* scale_product) {
    IntMatrix out;
    out.reserve(m.size());
    Integer product = 1;
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(x.get_num() * (l / x.get_den()));
        out.push_back(std::move(r));
        product *= l;
    }
    if (scale_product) *scale_product = product;
    return out;
}

// In-place Bareiss elimination. Returns the rank; `sign` tracks row swaps and
// the last pivot is the leading principal minor of the reduced matrix.
std::size_t bareiss(IntMatrix& a, std::size_t cols, int& sign, Integer& last_pivot) {
    const std::size_t rows = a.size();
    std::size_t r = 0;
    Integer prev = 1;
    sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    last_pivot = prev;
    return r;
}

}  // namespace

Rational det(const RatMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0 || column_count(m) != n) throw DimensionError("det requires a non-empty square matrix");
    Integer scale;
    IntMatrix a = integer_rows(m, &scale);
    int sign = 1;
    Integer pivot;
    if (bareiss(a, n, sign, pivot) < n) return Rational(0);
    return make_rational(sign * pivot, scale);
}

std::size_t rank(const RatMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t cols = column_count(m);
    IntMatrix a = integer_rows(m, nullptr);
    int sign = 1;
    Integer pivot;
    return bareiss(a, cols, sign, pivot);
}

std::vector<RatVector> null_space(const RatMatrix& m, std::size_t cols) {
    if (!m.empty() && column_count(m) != cols) throw DimensionError("null_space column count mismatch");
    RatMatrix a = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        RatVector v = zero_vector(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVector solve(const RatMatrix& m, const RatVector& rhs) {
    const std::size_t n = m.size();
    if (column_count(m) != n || rhs.size() != n) throw DimensionError("solve requires a square system");
    RatMatrix a = m;
    RatVector b = rhs;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw DomainError("singular system");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

RatMatrix identity_matrix(std::size_t n) {
    RatMatrix m(n, zero_vector(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMatrix transpose(const RatMatrix& m) {
    const std::size_t cols = column_count(m);
    RatMatrix t(cols, RatVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t inner = column_count(a);
    if (inner != b.size()) throw DimensionError("matrix product shape mismatch");
    const std::size_t cols = column_count(b);
    RatMatrix out(a.size(), zero_vector(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

RatVector multiply(const RatMatrix& m, const RatVector& v) {
    RatVector out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(dot(row, v));
    return out;
}

HermiteForm hermite_normal_form(const RatMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = column_count(m);
    if (rows == 0 || cols == 0) throw DimensionError("hermite_normal_form requires a non-empty matrix");
    IntMatrix a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (!is_integer(m[i][j])) throw DomainError("hermite_normal_form requires integer entries");
            a[i][j] = m[i][j].get_num();
        }
    IntMatrix u(rows, std::vector<Integer>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

    auto sub_multiple = [&](std::size_t target, std::size_t source, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols; ++j) a[target][j] -= q * a[source][j];
        for (std::size_t j = 0; j < rows; ++j) u[target][j] -= q * u[source][j];
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on the column: repeatedly move the smallest nonzero entry to
        // the pivot row and reduce everything below it.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == rows) break;
            std::swap(a[best], a[r]);
            std::swap(u[best], u[r]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                sub_multiple(i, r, q);
                if (a[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0) {
            for (auto& x : a[r]) x = -x;
            for (auto& x : u[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            sub_multiple(i, r, q);
        }
        ++r;
    }

    HermiteForm out;
    out.rank = r;
    out.h.assign(rows, RatVector(cols));
    out.u.assign(rows, RatVector(rows));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out.h[i][j] = Rational(a[i][j]);
        for (std::size_t j = 0; j < rows; ++j) out.u[i][j] = Rational(u[i][j]);
    }
    return out;
}

}  // namespace freesum
