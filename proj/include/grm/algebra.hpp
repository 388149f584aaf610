#pragma once

// The modular algebra A = F_q[X_1..X_m]/(X_1^q - 1, ..., X_m^q - 1).
// Elements are dense coefficient vectors of length q^m in monomial rank
// order, identified with F_q^(q^m) with no hidden normalization. B_d, the
// basis of the d-th radical power M^d, consists of the products
// prod_l (x_l - 1)^(i_l) with |i| >= d; the nilpotency index is m(q-1)+1.
//
// phi is the evaluation isomorphism P(m,q) -> A: coefficient at rank(i) is
// P(beta_{i_1}, ..., beta_{i_m}). Its inverse expands the coefficient table
// against the indicator tensors prod_l F_{beta_{j_l}}(Y_l).

#include <cstdint>
#include <span>
#include <vector>

#include "grm/gf.hpp"
#include "grm/interp.hpp"
#include "grm/multiindex.hpp"
#include "grm/poly.hpp"

namespace grm {

class AlgebraElement {
public:
    AlgebraElement(FieldPtr f, unsigned m, std::uint64_t max_points = kDefaultMaxPoints)
        : f_(std::move(f)), m_(m), c_(pow_points(f_->q(), m, max_points), 0) {
        if (m_ == 0) throw ArityMismatchError("algebra element needs at least one variable");
    }

    static AlgebraElement from_coeffs(FieldPtr f, unsigned m, std::vector<Elem> coeffs) {
        AlgebraElement out(std::move(f), m);
        if (coeffs.size() != out.c_.size()) throw LengthMismatchError("coefficient vector length != q^m");
        out.c_ = std::move(coeffs);
        return out;
    }

    static AlgebraElement monomial(const FieldPtr& f, unsigned m, const MultiIndex& idx, Elem c = 1) {
        AlgebraElement out(f, m);
        out.c_[monomial_rank(f->q(), idx)] = c;
        return out;
    }

    static AlgebraElement unit(const FieldPtr& f, unsigned m) {
        return monomial(f, m, MultiIndex(m, 0));
    }

    const FieldPtr& field() const { return f_; }
    unsigned arity() const { return m_; }
    std::uint64_t size() const { return c_.size(); }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(std::uint64_t rank) const { return c_.at(rank); }
    Elem coeff(const MultiIndex& idx) const { return c_.at(monomial_rank(f_->q(), idx)); }
    void set_coeff(std::uint64_t rank, Elem c) { c_.at(rank) = c; }

    AlgebraElement add(const AlgebraElement& o) const {
        check_compatible(o);
        AlgebraElement out(f_, m_);
        for (std::uint64_t k = 0; k < c_.size(); ++k) out.c_[k] = f_->add(c_[k], o.c_[k]);
        return out;
    }

    AlgebraElement scale(Elem s) const {
        AlgebraElement out(f_, m_);
        for (std::uint64_t k = 0; k < c_.size(); ++k) out.c_[k] = f_->mul(c_[k], s);
        return out;
    }

    bool is_zero() const {
        for (auto c : c_)
            if (c) return false;
        return true;
    }

    bool operator==(const AlgebraElement& o) const {
        return same_field(*f_, *o.f_) && m_ == o.m_ && c_ == o.c_;
    }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    void check_compatible(const AlgebraElement& o) const {
        require_same_field(f_, o.f_);
        if (m_ != o.m_) throw ArityMismatchError("algebra arity mismatch");
    }

private:
    FieldPtr f_;
    unsigned m_;
    std::vector<Elem> c_;
};

// Convolution with exponents added componentwise mod q (x_l^q = 1).
inline AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_compatible(b);
    const FieldPtr& f = a.field();
    const std::uint32_t q = f->q();
    const unsigned m = a.arity();
    AlgebraElement out(f, m);
    for (std::uint64_t ra = 0; ra < a.size(); ++ra) {
        const Elem ca = a.coeff(ra);
        if (ca == 0) continue;
        const MultiIndex ia = monomial_unrank(q, m, ra);
        for (std::uint64_t rb = 0; rb < b.size(); ++rb) {
            const Elem cb = b.coeff(rb);
            if (cb == 0) continue;
            MultiIndex ic = monomial_unrank(q, m, rb);
            for (unsigned l = 0; l < m; ++l) ic[l] = static_cast<std::uint16_t>((ic[l] + ia[l]) % q);
            const std::uint64_t rc = monomial_rank(q, ic);
            out.set_coeff(rc, f->add(out.coeff(rc), f->mul(ca, cb)));
        }
    }
    return out;
}

// B_i = prod_l (x_l - 1)^(i_l), built per variable from signed binomials and
// tensored; never by repeated algebra multiplication.
inline AlgebraElement b_poly(const FieldPtr& f, const MultiIndex& idx,
                             std::uint64_t max_points = kDefaultMaxPoints) {
    const std::uint32_t q = f->q();
    const unsigned m = static_cast<unsigned>(idx.size());
    pow_points(q, m, max_points);
    std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(q, 0));
    for (unsigned l = 0; l < m; ++l) {
        if (idx[l] >= q) throw IndexOutOfRangeError("b_poly: exponent out of [0, q-1]");
        for (std::uint32_t j = 0; j <= idx[l]; ++j) rows[l][j] = detail::signed_binom(f, idx[l], j);
    }
    std::vector<Elem> acc{Elem(1)};
    for (unsigned l = 0; l < m; ++l) {
        std::vector<Elem> next(acc.size() * q, 0);
        for (std::size_t a = 0; a < acc.size(); ++a) {
            if (acc[a] == 0) continue;
            for (std::uint32_t j = 0; j < q; ++j) next[a * q + j] = f->mul(acc[a], rows[l][j]);
        }
        acc = std::move(next);
    }
    return AlgebraElement::from_coeffs(f, m, std::move(acc));
}

// Multi-indices with |i| >= d in rank order.
inline std::vector<MultiIndex> radical_indices(std::uint32_t q, unsigned m, std::uint32_t d,
                                               std::uint64_t max_points = kDefaultMaxPoints) {
    if (d > static_cast<std::uint32_t>(m) * (q - 1) + 1)
        throw IndexOutOfRangeError("radical power out of [0, m(q-1)+1]");
    const std::uint64_t n = pow_points(q, m, max_points);
    std::vector<MultiIndex> out;
    for (std::uint64_t rank = 0; rank < n; ++rank) {
        MultiIndex idx = monomial_unrank(q, m, rank);
        if (weight(idx) >= d) out.push_back(std::move(idx));
    }
    return out;
}

// The basis B_d of M^d; empty exactly at d = m(q-1)+1.
inline std::vector<AlgebraElement> radical_basis(const FieldPtr& f, unsigned m, std::uint32_t d,
                                                 std::uint64_t max_points = kDefaultMaxPoints) {
    std::vector<AlgebraElement> out;
    for (const auto& idx : radical_indices(f->q(), m, d, max_points))
        out.push_back(b_poly(f, idx, max_points));
    return out;
}

// Counts of {i in [0,q-1]^m : |i| = s} by dynamic programming.
inline std::vector<std::uint64_t> weight_counts(std::uint32_t q, unsigned m) {
    std::vector<std::uint64_t> n{1};
    for (unsigned l = 0; l < m; ++l) {
        std::vector<std::uint64_t> next(n.size() + q - 1, 0);
        for (std::size_t s = 0; s < n.size(); ++s)
            for (std::uint32_t c = 0; c < q; ++c) next[s + c] += n[s];
        n = std::move(next);
    }
    return n; // length m(q-1)+1
}

inline std::uint64_t radical_dim(std::uint32_t q, unsigned m, std::uint32_t d) {
    const auto counts = weight_counts(q, m);
    if (d > counts.size()) throw IndexOutOfRangeError("radical power out of [0, m(q-1)+1]");
    std::uint64_t total = 0;
    for (std::size_t s = d; s < counts.size(); ++s) total += counts[s];
    return total;
}

inline std::uint64_t code_dim_count(std::uint32_t q, unsigned m, std::uint32_t nu) {
    const auto counts = weight_counts(q, m);
    if (nu > static_cast<std::uint32_t>(m) * (q - 1))
        throw IndexOutOfRangeError("code order out of [0, m(q-1)]");
    std::uint64_t total = 0;
    for (std::size_t s = 0; s <= nu; ++s) total += counts[s];
    return total;
}

// Evaluation isomorphism: coefficient at rank(i) is P(beta_{i_1},...,beta_{i_m}).
inline AlgebraElement phi(const ReducedPoly& poly, std::uint64_t max_points = kDefaultMaxPoints) {
    const FieldPtr& f = poly.field();
    const std::uint32_t q = f->q();
    const unsigned m = poly.arity();
    AlgebraElement out(f, m, max_points);
    std::vector<Elem> point(m);
    for (std::uint64_t rank = 0; rank < out.size(); ++rank) {
        const MultiIndex idx = monomial_unrank(q, m, rank);
        for (unsigned l = 0; l < m; ++l) point[l] = f->beta(idx[l]);
        out.set_coeff(rank, poly.eval(point));
    }
    return out;
}

// Inverse by indicator-tensor expansion: sum_j a_j prod_l F_{beta_{j_l}}(Y_l),
// accumulated densely in rank order and then sparsified.
inline ReducedPoly phi_inv(const AlgebraElement& a) {
    const FieldPtr& f = a.field();
    const std::uint32_t q = f->q();
    const unsigned m = a.arity();

    std::vector<std::vector<Elem>> indicator(q, std::vector<Elem>(q, 0));
    for (std::uint32_t k = 0; k < q; ++k) {
        const UniPoly fk = indicator_poly(f, k);
        for (std::uint32_t d = 0; d < q; ++d) indicator[k][d] = fk.coeff(d);
    }

    std::vector<Elem> dense(a.size(), 0);
    std::vector<Elem> scratch;
    for (std::uint64_t rank = 0; rank < a.size(); ++rank) {
        const Elem aj = a.coeff(rank);
        if (aj == 0) continue;
        const MultiIndex j = monomial_unrank(q, m, rank);
        scratch.assign(1, aj);
        for (unsigned l = 0; l < m; ++l) {
            std::vector<Elem> next(scratch.size() * q, 0);
            for (std::size_t t = 0; t < scratch.size(); ++t) {
                if (scratch[t] == 0) continue;
                const auto& row = indicator[j[l]];
                for (std::uint32_t d = 0; d < q; ++d) next[t * q + d] = f->mul(scratch[t], row[d]);
            }
            scratch = std::move(next);
        }
        for (std::uint64_t t = 0; t < dense.size(); ++t) dense[t] = f->add(dense[t], scratch[t]);
    }

    ReducedPoly out(f, m);
    for (std::uint64_t rank = 0; rank < dense.size(); ++rank)
        if (dense[rank] != 0) out.add_term(monomial_unrank(q, m, rank), dense[rank]);
    return out;
}

} // namespace grm
