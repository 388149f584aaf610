#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: Pascal-triangle binomials, Lagrange interpolation from first
// principles, naive convolution and term-by-term evaluation, and exhaustive
// span enumeration over tiny fields.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "grm/gf.hpp"
#include "grm/linalg.hpp"
#include "grm/poly.hpp"

namespace oracle {

inline unsigned pascal_binom(unsigned n, unsigned k, unsigned p) {
    if (k > n) return 0;
    std::vector<std::vector<unsigned>> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1);
        for (unsigned j = 1; j < i; ++j) c[i][j] = (c[i - 1][j - 1] + c[i - 1][j]) % p;
    }
    return c[n][k];
}

// Lagrange basis products; a construction path the library never uses.
inline grm::UniPoly lagrange_interpolate(const grm::FieldPtr& f,
                                         const std::vector<grm::Elem>& points,
                                         const std::vector<grm::Elem>& values) {
    grm::UniPoly acc = grm::UniPoly::zero(f);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (values[j] == 0) continue;
        grm::UniPoly basis = grm::UniPoly::constant(f, 1);
        grm::Elem denom = 1;
        for (std::size_t k = 0; k < points.size(); ++k) {
            if (k == j) continue;
            basis = basis.mul(grm::UniPoly::linear_root(f, points[k]));
            denom = f->mul(denom, f->sub(points[j], points[k]));
        }
        acc = acc.add(basis.scale(f->mul(values[j], f->inv(denom))));
    }
    return acc;
}

inline std::vector<grm::Elem> naive_convolution(const grm::FieldPtr& f,
                                                const std::vector<grm::Elem>& a,
                                                const std::vector<grm::Elem>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<grm::Elem> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = f->add(c[i + j], f->mul(a[i], b[j]));
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

inline grm::Elem term_sum_eval(const grm::ReducedPoly& poly, const std::vector<grm::Elem>& point) {
    const auto& f = poly.field();
    grm::Elem acc = 0;
    for (const auto& [idx, c] : poly.terms()) {
        grm::Elem t = c;
        for (std::size_t l = 0; l < idx.size(); ++l)
            for (unsigned e = 0; e < idx[l]; ++e) t = f->mul(t, point[l]);
        acc = f->add(acc, t);
    }
    return acc;
}

inline grm::Elem pow_by_repeated_mul(const grm::FieldPtr& f, grm::Elem a, unsigned e) {
    grm::Elem acc = 1;
    for (unsigned k = 0; k < e; ++k) acc = f->mul(acc, a);
    return acc;
}

// All q^rows linear combinations of the rows; feasible only for tiny inputs.
inline std::set<std::vector<grm::Elem>> enumerate_span(const grm::MatrixGF& m) {
    const auto& f = m.field();
    const std::uint32_t q = f->q();
    std::set<std::vector<grm::Elem>> span;
    std::vector<grm::Elem> combo(m.rows(), 0);
    while (true) {
        std::vector<grm::Elem> v(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (combo[r] == 0) continue;
            for (std::size_t c = 0; c < m.cols(); ++c)
                v[c] = f->add(v[c], f->mul(combo[r], m.at(r, c)));
        }
        span.insert(std::move(v));
        std::size_t r = 0;
        while (r < combo.size()) {
            combo[r] = static_cast<grm::Elem>((combo[r] + 1) % q);
            if (combo[r] != 0) break;
            ++r;
        }
        if (r == combo.size()) break;
    }
    return span;
}

// log_q of the span size; only exact for q prime (enough for F_2/F_3 tests).
inline std::size_t span_rank(const std::set<std::vector<grm::Elem>>& span, std::uint32_t q) {
    std::size_t rank = 0;
    std::uint64_t size = 1;
    while (size < span.size()) {
        size *= q;
        ++rank;
    }
    return rank;
}

inline std::mt19937 rng(std::uint32_t seed) { return std::mt19937(seed); }

inline grm::Elem random_elem(std::mt19937& g, std::uint32_t q) {
    return static_cast<grm::Elem>(g() % q);
}

} // namespace oracle
