#include "freesum/ehrhart.hpp"

#include <algorithm>

#include "freesum/errors.hpp"
#include "freesum/sums.hpp"
#include "freesum/volume.hpp"

namespace freesum {

namespace {

class LatticeCounter {
public:
    LatticeCounter(const Polytope& p, unsigned m) : d_(p.ambient_dim()) {
        const auto& facets = p.facets();
        normals_.resize(facets.size());
        rhs_.resize(facets.size());
        for (std::size_t f = 0; f < facets.size(); ++f) {
            for (const auto& a : facets[f].plane.normal) normals_[f].push_back(a.get_num());
            rhs_[f] = facets[f].plane.offset.get_num() * m;
        }
        lo_.assign(d_, 0);
        hi_.assign(d_, 0);
        for (std::size_t c = 0; c < d_; ++c) {
            Integer lo = p.vertices().front()[c].get_num(), hi = lo;
            for (const auto& v : p.vertices()) {
                lo = std::min<Integer>(lo, v[c].get_num());
                hi = std::max<Integer>(hi, v[c].get_num());
            }
            lo_[c] = lo * m;
            hi_[c] = hi * m;
        }
        // min_rest_[k][f]: smallest possible contribution of coordinates k.. to facet f.
        min_rest_.assign(d_ + 1, std::vector<Integer>(facets.size(), 0));
        for (std::size_t k = d_; k-- > 0;)
            for (std::size_t f = 0; f < facets.size(); ++f) {
                const Integer& a = normals_[f][k];
                min_rest_[k][f] = min_rest_[k + 1][f] + (sgn(a) >= 0 ? a * lo_[k] : a * hi_[k]);
            }
        partial_.assign(d_ + 1, std::vector<Integer>(facets.size(), 0));
    }

    Integer box_size() const {
        Integer n = 1;
        for (std::size_t c = 0; c < d_; ++c) n *= hi_[c] - lo_[c] + 1;
        return n;
    }

    Integer count() {
        total_ = 0;
        sweep(0);
        return total_;
    }

private:
    void sweep(std::size_t k) {
        const std::size_t nf = normals_.size();
        const auto& base = partial_[k];
        if (k + 1 == d_) {
            Integer lo = lo_[k], hi = hi_[k], room;
            for (std::size_t f = 0; f < nf; ++f) {
                const Integer& a = normals_[f][k];
                room = rhs_[f] - base[f];
                int s = sgn(a);
                if (s > 0) {
                    Integer b;
                    mpz_fdiv_q(b.get_mpz_t(), room.get_mpz_t(), a.get_mpz_t());
                    if (b < hi) hi = b;
                } else if (s < 0) {
                    Integer b;
                    mpz_cdiv_q(b.get_mpz_t(), room.get_mpz_t(), a.get_mpz_t());
                    if (b > lo) lo = b;
                } else if (sgn(room) < 0) {
                    return;
                }
                if (lo > hi) return;
            }
            total_ += hi - lo + 1;
            return;
        }
        auto& next = partial_[k + 1];
        for (std::size_t f = 0; f < nf; ++f) next[f] = base[f] + normals_[f][k] * lo_[k];
        for (Integer x = lo_[k]; x <= hi_[k]; ++x) {
            bool feasible = true;
            for (std::size_t f = 0; f < nf && feasible; ++f)
                feasible = next[f] + min_rest_[k + 1][f] <= rhs_[f];
            if (feasible) sweep(k + 1);
            for (std::size_t f = 0; f < nf; ++f) next[f] += normals_[f][k];
        }
    }

    std::size_t d_;
    std::vector<std::vector<Integer>> normals_;
    std::vector<Integer> rhs_;
    std::vector<Integer> lo_, hi_;
    std::vector<std::vector<Integer>> min_rest_;
    std::vector<std::vector<Integer>> partial_;
    Integer total_;
};

}  // namespace

Integer lattice_point_count(const Polytope& p, unsigned m, std::uint64_t budget) {
    if (!p.is_lattice()) throw DomainError("lattice_point_count requires a lattice polytope");
    if (m == 0) return 1;
    LatticeCounter counter(p, m);
    const Integer box = counter.box_size();
    if (box > Integer(std::to_string(budget)))
        throw BudgetExceededError("lattice point budget exceeded: dilate " + std::to_string(m) + " needs a box of " +
                                  box.get_str() + " points, budget is " + std::to_string(budget));
    return counter.count();
}

std::vector<Integer> trim_trailing_zeros(std::vector<Integer> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

EhrhartData ehrhart_data(const Polytope& p, std::uint64_t budget) {
    EhrhartData data;
    data.dim = p.ambient_dim();
    const unsigned d = static_cast<unsigned>(data.dim);
    for (unsigned m = 0; m <= d; ++m) data.counts.push_back(lattice_point_count(p, m, budget));

    std::vector<std::pair<Rational, Rational>> samples;
    for (unsigned m = 0; m <= d; ++m) samples.emplace_back(Rational(m), Rational(data.counts[m]));
    data.ehrhart = lagrange_interpolate(samples);

    for (unsigned i = 0; i <= d; ++i) {
        Integer h = 0;
        for (unsigned j = 0; j <= i; ++j) {
            Integer term = binomial(d + 1, j) * data.counts[i - j];
            if (j % 2) h -= term; else h += term;
        }
        data.h_star.push_back(h);
    }

    if (data.h_star.front() != 1) throw InternalConsistencyError("h*_0 != 1");
    Integer sum = 0;
    for (const auto& h : data.h_star) {
        if (h < 0) throw InternalConsistencyError("negative h* coefficient " + h.get_str());
        sum += h;
    }
    const Rational vol = normalized_volume(p);
    if (Rational(sum) != vol)
        throw InternalConsistencyError("sum of h* (" + sum.get_str() + ") differs from normalized volume " +
                                       to_string(vol));
    if (data.ehrhart.degree() != static_cast<int>(d) ||
        data.ehrhart.coefficient(d) * Rational(factorial(d)) != vol)
        throw InternalConsistencyError("Ehrhart leading coefficient differs from the Euclidean volume");
    if (data.ehrhart(0) != 1) throw InternalConsistencyError("Ehrhart polynomial at 0 is not 1");
    return data;
}

void validate_ehrhart_polynomial(const Polytope& p, const EhrhartData& data, std::uint64_t budget) {
    const unsigned d = static_cast<unsigned>(data.dim);
    for (unsigned m = d + 1; m <= 2 * d; ++m) {
        const Integer direct = lattice_point_count(p, m, budget);
        if (data.ehrhart(Rational(m)) != Rational(direct))
            throw InternalConsistencyError("interpolated Ehrhart polynomial disagrees with the count at m = " +
                                           std::to_string(m));
    }
}

Polynomial ehrhart_polynomial(const Polytope& p, std::uint64_t budget) {
    auto data = ehrhart_data(p, budget);
    validate_ehrhart_polynomial(p, data, budget);
    return data.ehrhart;
}

std::vector<Integer> h_star_vector(const Polytope& p, std::uint64_t budget) {
    return ehrhart_data(p, budget).h_star;
}

BraunReport braun_check(const Polytope& p, const Polytope& q, std::uint64_t budget) {
    BraunReport r;
    r.p_reflexive = is_reflexive(p);
    if (!q.is_lattice()) throw DomainError("braun_check requires lattice polytopes");
    r.q_origin_interior = contains(q, zero_vector(q.ambient_dim())) == Location::Interior;
    auto hp = h_star_vector(p, budget);
    auto hq = h_star_vector(q, budget);
    auto direct = h_star_vector(free_sum(p, q).polytope, budget);
    r.product = trim_trailing_zeros(convolve(hp, hq));
    r.h_p = trim_trailing_zeros(std::move(hp));
    r.h_q = trim_trailing_zeros(std::move(hq));
    r.direct = trim_trailing_zeros(std::move(direct));
    r.equal = r.product == r.direct;
    return r;
}

}  // namespace freesum
