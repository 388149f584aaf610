#pragma once

// Indicator and interpolation polynomials over F_q.
//
// F_b(Y) = 1 - (Y - b)^(q-1) is 1 at b and 0 elsewhere. The interpolation
// polynomial of order i against an enumeration beta_0..beta_{q-1} is
//
//   H_i(Y) = sum_{k=0}^{i} (-1)^(i-k) C(i,k) F_{beta_k}(Y),
//
// the unique reduced polynomial whose value at beta_j is the signed binomial
// coefficient of x^j in (x-1)^i. Which polynomial that is depends on the
// enumeration. Two closed forms are provided:
//   * extension fields (primitive enumeration): the alpha-power form
//     H_i = sum_{d=1}^{q-1} alpha^(-d) [(-1)^i - (alpha^d - 1)^i] Y^(q-1-d);
//   * prime fields (natural enumeration): the coefficient-table form
//     H_i = a_{i,0} - sum_d a_{i,d} Y^(p-1-d) with
//     a_{i,d} = sum_j (-1)^(i-j) C(i,j) j^d (0^0 = 1),
// plus, for prime fields, the factored product form -i! * prod (Y+j) and the
// backward recurrence H_{p-1} = 1, H_i = (i+1)^(-1) (Y-i-1) H_{i+1}, all of
// degree p-1-i.

#include <cstdint>
#include <vector>

#include "grm/gf.hpp"
#include "grm/multiindex.hpp"
#include "grm/poly.hpp"

namespace grm {

namespace detail {

// Signed binomial (-1)^(i-k) C(i,k) embedded in the field.
inline Elem signed_binom(const FieldPtr& f, std::uint64_t i, std::uint64_t k) {
    const Elem c = f->scalar(binom_mod_p(i, k, f->p()));
    return (i - k) % 2 == 1 ? f->neg(c) : c;
}

// 1 - (Y - b)^(q-1), expanded. Since C(q-1,d) = (-1)^d mod p, the power
// collapses to sum_d b^(q-1-d) Y^d, so the indicator needs only a row of
// powers of b (with b^0 = 1, also at b = 0).
inline UniPoly indicator_at_point(const FieldPtr& f, Elem b) {
    const std::uint32_t q = f->q();
    std::vector<Elem> coeffs(q, 0);
    for (std::uint32_t d = 0; d < q; ++d)
        coeffs[d] = f->neg(f->pow(b, static_cast<long long>(q) - 1 - d));
    coeffs[0] = f->add(coeffs[0], 1);
    return UniPoly::from_coeffs(f, std::move(coeffs));
}

inline UniPoly h_poly_at(const FieldPtr& f, std::uint32_t i, bool primitive) {
    if (i >= f->q()) throw IndexOutOfRangeError("h_poly: order out of [0, q-1]");
    UniPoly acc = UniPoly::zero(f);
    for (std::uint32_t k = 0; k <= i; ++k) {
        const Elem point = primitive ? f->beta_primitive(k) : f->beta(k);
        acc = acc.add(indicator_at_point(f, point).scale(signed_binom(f, i, k)));
    }
    return acc;
}

} // namespace detail

// F_{beta_k} for the field enumeration.
inline UniPoly indicator_poly(const FieldPtr& f, std::uint32_t k) {
    return detail::indicator_at_point(f, f->beta(k));
}

// H_i against the field enumeration (the one codes and phi use).
inline UniPoly h_poly(const FieldPtr& f, std::uint32_t i) {
    return detail::h_poly_at(f, i, false);
}

// H_i against the primitive enumeration beta_k = alpha^(k-1).
inline UniPoly h_poly_primitive(const FieldPtr& f, std::uint32_t i) {
    return detail::h_poly_at(f, i, true);
}

// a_{i,d} = sum_{j=0}^{i} (-1)^(i-j) C(i,j) j^d over F_p, with 0^0 = 1.
struct CoeffTable {
    unsigned p = 0;
    std::vector<std::vector<unsigned>> a; // a[i][d], 0 <= i,d <= p-1
};

inline CoeffTable a_coeff_table(unsigned p) {
    if (!is_prime(p)) throw NonPrimeError("a_coeff_table: p must be prime");
    CoeffTable t;
    t.p = p;
    t.a.assign(p, std::vector<unsigned>(p, 0));
    for (unsigned i = 0; i < p; ++i)
        for (unsigned d = 0; d < p; ++d) {
            std::uint64_t acc = 0;
            for (unsigned j = 0; j <= i; ++j) {
                const std::uint64_t jd = (j == 0 && d == 0) ? 1 : detail::pow_mod(j, d, p);
                const std::uint64_t term = binom_mod_p(i, j, p) * jd % p;
                acc = (i - j) % 2 == 1 ? (acc + p - term) % p : (acc + term) % p;
            }
            t.a[i][d] = static_cast<unsigned>(acc);
        }
    return t;
}

// The alpha-power closed form, stated for 1 <= i <= q-1; i = 0 is the
// indicator at zero, 1 - Y^(q-1). Equals h_poly_primitive coefficientwise.
inline UniPoly h_closed_primitive(const FieldPtr& f, std::uint32_t i) {
    const std::uint32_t q = f->q();
    if (i >= q) throw IndexOutOfRangeError("h_closed: order out of [0, q-1]");
    if (i == 0)
        return UniPoly::constant(f, 1).sub(UniPoly::monomial(f, q - 1, 1));
    std::vector<Elem> coeffs(q, 0);
    const Elem minus_one = f->neg(1);
    const Elem sign = i % 2 == 0 ? Elem(1) : minus_one; // (-1)^i
    for (std::uint32_t d = 1; d <= q - 1; ++d) {
        const Elem ad = f->exp(d);                       // alpha^d
        const Elem bracket = f->sub(sign, f->pow(f->sub(ad, 1), i));
        coeffs[q - 1 - d] = f->mul(f->inv(ad), bracket);
    }
    return UniPoly::from_coeffs(f, std::move(coeffs));
}

// The coefficient-table closed form for prime fields (natural enumeration),
// implemented literally: a_{i,0} appears both as the constant and inside the
// sum at d = 0.
inline UniPoly h_closed_natural(const FieldPtr& f, std::uint32_t i) {
    if (!f->prime_field()) throw NonPrimeError("h_closed_natural: needs a prime field");
    const unsigned p = f->p();
    if (i >= p) throw IndexOutOfRangeError("h_closed: order out of [0, p-1]");
    const CoeffTable t = a_coeff_table(p);
    std::vector<Elem> coeffs(p, 0);
    for (unsigned d = 0; d < p; ++d)
        coeffs[p - 1 - d] = f->neg(f->scalar(t.a[i][d]));
    coeffs[0] = f->add(coeffs[0], f->scalar(t.a[i][0]));
    return UniPoly::from_coeffs(f, std::move(coeffs));
}

// Closed form matching h_poly for the field's own enumeration.
inline UniPoly h_closed(const FieldPtr& f, std::uint32_t i) {
    return f->prime_field() ? h_closed_natural(f, i) : h_closed_primitive(f, i);
}

struct HPrimeForms {
    UniPoly coeff_form;
    UniPoly product_form;
    UniPoly recurrence_form;
};

// The three prime-field constructions of H_i; all equal h_poly(i) and have
// degree p-1-i.
inline HPrimeForms h_prime_forms(const FieldPtr& f, std::uint32_t i) {
    if (!f->prime_field()) throw NonPrimeError("h_prime_forms: needs a prime field");
    const unsigned p = f->p();
    if (i >= p) throw IndexOutOfRangeError("h_prime_forms: order out of [0, p-1]");

    UniPoly product = UniPoly::constant(f, 1);
    for (unsigned j = 1; j <= p - 1 - i; ++j)
        product = product.mul(UniPoly::linear_root(f, f->neg(f->scalar(j)))); // Y + j
    Elem factorial = 1;
    for (unsigned j = 2; j <= i; ++j) factorial = f->mul(factorial, f->scalar(j));
    product = product.scale(f->neg(factorial)); // alpha_i = -i!

    UniPoly rec = UniPoly::constant(f, 1); // H_{p-1}
    for (std::uint32_t j = p - 1; j-- > i;) {
        // H_j = (j+1)^(-1) (Y - j - 1) H_{j+1}
        const Elem inv = f->inv(f->scalar(j + 1));
        rec = UniPoly::linear_root(f, f->scalar(j + 1)).mul(rec).scale(inv);
    }

    return HPrimeForms{h_closed_natural(f, i), std::move(product), std::move(rec)};
}

// H_multi(i) = prod_l H_{i_l}(Y_l); total degree is the sum of the factor
// degrees since leading monomials sit in distinct variables.
inline ReducedPoly h_multi(const FieldPtr& f, const MultiIndex& idx,
                           std::uint64_t max_points = kDefaultMaxPoints) {
    std::vector<UniPoly> factors;
    factors.reserve(idx.size());
    for (auto i : idx) factors.push_back(h_poly(f, i));
    return tensor_product(factors, max_points);
}

// Degree of h_poly(i) without expanding the tensor.
inline int h_multi_degree(const FieldPtr& f, const MultiIndex& idx) {
    int total = 0;
    for (auto i : idx) {
        const int d = h_poly(f, i).degree();
        if (d == kNegInfDegree) return kNegInfDegree; // cannot happen: H_i != 0
        total += d;
    }
    return total;
}

} // namespace grm
