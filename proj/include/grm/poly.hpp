#pragma once

// Univariate polynomials over F_q and the reduced m-variate space P(m,q):
// every exponent in [0, q-1], sparse term map keyed by MultiIndex. Both types
// are canonical value types, so coefficientwise equality is polynomial
// equality. The degree of the zero polynomial is the sentinel kNegInfDegree,
// which compares below every attainable degree.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "grm/gf.hpp"
#include "grm/multiindex.hpp"

namespace grm {

inline constexpr int kNegInfDegree = -0x7fffffff;

class UniPoly {
public:
    explicit UniPoly(FieldPtr f) : f_(std::move(f)) {}

    static UniPoly zero(FieldPtr f) { return UniPoly(std::move(f)); }

    static UniPoly constant(FieldPtr f, Elem c) {
        UniPoly out(std::move(f));
        if (c != 0) out.c_.push_back(c);
        return out;
    }

    static UniPoly monomial(FieldPtr f, unsigned deg, Elem c) {
        UniPoly out(std::move(f));
        if (c != 0) {
            out.c_.assign(deg + 1, 0);
            out.c_[deg] = c;
        }
        return out;
    }

    // Y - b
    static UniPoly linear_root(const FieldPtr& f, Elem b) {
        UniPoly out(f);
        out.c_ = {f->neg(b), Elem(1)};
        return out;
    }

    static UniPoly from_coeffs(FieldPtr f, std::vector<Elem> coeffs) {
        UniPoly out(std::move(f));
        out.c_ = std::move(coeffs);
        out.trim();
        return out;
    }

    const FieldPtr& field() const { return f_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }

    Elem coeff(std::size_t d) const { return d < c_.size() ? c_[d] : Elem(0); }

    UniPoly add(const UniPoly& o) const {
        require_same_field(f_, o.f_);
        UniPoly out(f_);
        out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = f_->add(coeff(i), o.coeff(i));
        out.trim();
        return out;
    }

    UniPoly sub(const UniPoly& o) const { return add(o.negate()); }

    UniPoly negate() const {
        UniPoly out(f_);
        out.c_.reserve(c_.size());
        for (auto c : c_) out.c_.push_back(f_->neg(c));
        return out;
    }

    UniPoly scale(Elem s) const {
        UniPoly out(f_);
        if (s == 0) return out;
        out.c_.reserve(c_.size());
        for (auto c : c_) out.c_.push_back(f_->mul(c, s));
        return out;
    }

    UniPoly mul(const UniPoly& o, bool reduce_functional = false) const {
        require_same_field(f_, o.f_);
        UniPoly out(f_);
        if (c_.empty() || o.c_.empty()) return out;
        out.c_.assign(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                out.c_[i + j] = f_->add(out.c_[i + j], f_->mul(c_[i], o.c_[j]));
        }
        out.trim();
        return reduce_functional ? out.reduced_functional() : out;
    }

    UniPoly pow(std::uint64_t e, bool reduce_functional = false) const {
        UniPoly acc = constant(f_, 1);
        UniPoly base = *this;
        while (e) {
            if (e & 1) acc = acc.mul(base, reduce_functional);
            e >>= 1;
            if (e) base = base.mul(base, reduce_functional);
        }
        return acc;
    }

    // Replace Y^q by Y until all exponents are <= q-1. Evaluation on F_q is
    // unchanged: for e >= 1, Y^e folds onto Y^(((e-1) mod (q-1)) + 1).
    UniPoly reduced_functional() const {
        const std::uint32_t q = f_->q();
        if (c_.size() <= q) return *this;
        std::vector<Elem> folded(q, 0);
        for (std::size_t e = 0; e < c_.size(); ++e) {
            if (c_[e] == 0) continue;
            const std::size_t target = e == 0 ? 0 : ((e - 1) % (q - 1)) + 1;
            folded[target] = f_->add(folded[target], c_[e]);
        }
        return from_coeffs(f_, std::move(folded));
    }

    Elem eval(Elem y) const {
        Elem acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, y), c_[i]);
        return acc;
    }

    bool operator==(const UniPoly& o) const { return same_field(*f_, *o.f_) && c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr f_;
    std::vector<Elem> c_;
};

class ReducedPoly {
public:
    ReducedPoly(FieldPtr f, unsigned m) : f_(std::move(f)), m_(m) {
        if (m_ == 0) throw ArityMismatchError("reduced polynomial needs at least one variable");
    }

    static ReducedPoly constant(FieldPtr f, unsigned m, Elem c) {
        ReducedPoly out(std::move(f), m);
        if (c != 0) out.terms_.emplace(MultiIndex(m, 0), c);
        return out;
    }

    const FieldPtr& field() const { return f_; }
    unsigned arity() const { return m_; }
    const std::map<MultiIndex, Elem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Elem coeff(const MultiIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? Elem(0) : it->second;
    }

    void add_term(const MultiIndex& idx, Elem c) {
        if (idx.size() != m_) throw ArityMismatchError("term arity mismatch");
        for (auto e : idx)
            if (e >= f_->q()) throw IndexOutOfRangeError("exponent not reduced (>= q)");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(idx, c);
        if (!inserted) {
            it->second = f_->add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    ReducedPoly add(const ReducedPoly& o) const {
        require_same_field(f_, o.f_);
        if (m_ != o.m_) throw ArityMismatchError("arity mismatch in add");
        ReducedPoly out = *this;
        for (const auto& [idx, c] : o.terms_) out.add_term(idx, c);
        return out;
    }

    ReducedPoly scale(Elem s) const {
        ReducedPoly out(f_, m_);
        if (s == 0) return out;
        for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, f_->mul(c, s));
        return out;
    }

    int total_degree() const {
        if (terms_.empty()) return kNegInfDegree;
        int best = 0;
        for (const auto& [idx, c] : terms_) best = std::max(best, static_cast<int>(weight(idx)));
        return best;
    }

    // Horner nested per variable, walking the lexicographically sorted term
    // map; each variable contributes one generalized Horner pass with gap
    // exponentiation.
    Elem eval(std::span<const Elem> point) const {
        if (point.size() != m_) throw ArityMismatchError("evaluation point arity mismatch");
        return eval_range(terms_.begin(), terms_.end(), 0, point);
    }

    bool operator==(const ReducedPoly& o) const {
        return same_field(*f_, *o.f_) && m_ == o.m_ && terms_ == o.terms_;
    }
    bool operator!=(const ReducedPoly& o) const { return !(*this == o); }

private:
    using TermIt = std::map<MultiIndex, Elem>::const_iterator;

    Elem eval_range(TermIt first, TermIt last, unsigned var, std::span<const Elem> point) const {
        if (first == last) return 0;
        if (var == m_) return first->second;
        // Collect (exponent of `var`, value of the sub-polynomial) groups in
        // ascending exponent order; map order groups them contiguously.
        std::vector<std::pair<std::uint16_t, Elem>> groups;
        auto it = first;
        while (it != last) {
            const std::uint16_t e = it->first[var];
            auto stop = it;
            while (stop != last && stop->first[var] == e) ++stop;
            groups.emplace_back(e, eval_range(it, stop, var + 1, point));
            it = stop;
        }
        const Elem y = point[var];
        Elem acc = 0;
        std::uint16_t prev = 0;
        for (std::size_t g = groups.size(); g-- > 0;) {
            if (g + 1 < groups.size()) acc = f_->mul(acc, f_->pow(y, prev - groups[g].first));
            acc = f_->add(acc, groups[g].second);
            prev = groups[g].first;
        }
        return f_->mul(acc, f_->pow(y, groups.front().first));
    }

    FieldPtr f_;
    unsigned m_;
    std::map<MultiIndex, Elem> terms_;
};

// Product over l of factor_l(Y_l); variable l carries factor l.
inline ReducedPoly tensor_product(std::span<const UniPoly> factors,
                                  std::uint64_t max_points = kDefaultMaxPoints) {
    if (factors.empty()) throw ArityMismatchError("tensor_product needs at least one factor");
    const FieldPtr& f = factors.front().field();
    const unsigned m = static_cast<unsigned>(factors.size());
    const std::uint32_t q = f->q();
    pow_points(q, m, max_points);
    for (const auto& fac : factors) {
        require_same_field(f, fac.field());
        if (fac.degree() > static_cast<int>(q) - 1)
            throw IndexOutOfRangeError("tensor factor degree exceeds q-1");
    }

    ReducedPoly out(f, m);
    MultiIndex idx(m, 0);
    // Odometer over nonzero coefficients of each factor.
    std::vector<std::vector<std::pair<std::uint16_t, Elem>>> nz(m);
    for (unsigned l = 0; l < m; ++l) {
        const auto& cs = factors[l].coeffs();
        for (std::size_t d = 0; d < cs.size(); ++d)
            if (cs[d] != 0) nz[l].emplace_back(static_cast<std::uint16_t>(d), cs[d]);
        if (nz[l].empty()) return out; // a zero factor kills the product
    }
    std::vector<std::size_t> pos(m, 0);
    while (true) {
        Elem c = 1;
        for (unsigned l = 0; l < m; ++l) {
            idx[l] = nz[l][pos[l]].first;
            c = f->mul(c, nz[l][pos[l]].second);
        }
        out.add_term(idx, c);
        unsigned l = m;
        while (l-- > 0) {
            if (++pos[l] < nz[l].size()) break;
            pos[l] = 0;
            if (l == 0) return out;
        }
    }
}

inline ReducedPoly tensor_product(const std::vector<UniPoly>& factors,
                                  std::uint64_t max_points = kDefaultMaxPoints) {
    return tensor_product(std::span<const UniPoly>(factors), max_points);
}

} // namespace grm
