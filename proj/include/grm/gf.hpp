#pragma once

// Exact arithmetic in F_q, q = p^r <= 2^16. Elements are integer encodings
// sum c_i p^i of their polynomial-basis coefficient vector (c_0,...,c_{r-1}),
// so equality of encodings is equality of elements. Construction is fully
// deterministic: the modulus is the irreducible monic degree-r polynomial of
// smallest integer encoding, and alpha is the element of smallest encoding
// with multiplicative order exactly q-1. Multiplication and inversion go
// through log/antilog tables built once at construction.
//
// Every field carries two point enumerations beta_0..beta_{q-1}:
//   * the primitive enumeration beta_0 = 0, beta_k = alpha^(k-1);
//   * the field enumeration used by evaluation maps and codes, which is the
//     natural one (beta_k = k) for prime fields and the primitive one for
//     extension fields. Prime fields need the natural order: the classical
//     prime-field results (deg H_i = p-1-i and the Berman-Charpin equality)
//     hold in that coordinate order and fail under the primitive one.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "grm/errors.hpp"

namespace grm {

using Elem = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;
inline constexpr std::uint64_t kDefaultMaxPoints = 1ull << 20;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) acc = acc * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return acc;
}

// Dense polynomials over F_p used only while bootstrapping a field:
// coefficient vectors over [0,p), ascending degree.
using PolyFp = std::vector<unsigned>;

inline void poly_trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PolyFp poly_mul_fp(const PolyFp& a, const PolyFp& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PolyFp c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    poly_trim(c);
    return c;
}

// Remainder of a by a monic divisor. The top coefficient cancels exactly on
// every round, so the degree strictly decreases.
inline PolyFp poly_rem_fp(PolyFp a, const PolyFp& mod, unsigned p) {
    poly_trim(a);
    const std::size_t dm = mod.size() - 1;
    while (a.size() > dm) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < mod.size(); ++i) {
            auto& t = a[shift + i];
            t = (t + p - lead * mod[i] % p) % p;
        }
        poly_trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool poly_irreducible_fp(const PolyFp& f, unsigned p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    std::uint64_t count = 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            PolyFp div(d + 1, 0);
            std::uint64_t v = low;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<unsigned>(v % p);
                v /= p;
            }
            div[d] = 1;
            if (poly_rem_fp(f, div, p).empty()) return false;
        }
    }
    return true;
}

inline std::uint32_t poly_encode_fp(const PolyFp& a, unsigned p) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

inline PolyFp poly_decode_fp(std::uint32_t v, unsigned p) {
    PolyFp a;
    while (v) {
        a.push_back(v % p);
        v /= p;
    }
    return a;
}

} // namespace detail

// C(n, k) mod p via Lucas' decomposition of n and k in base p.
inline unsigned binom_mod_p(std::uint64_t n, std::uint64_t k, unsigned p) {
    if (!is_prime(p)) throw NonPrimeError("binom_mod_p: modulus must be prime");
    if (k > n) return 0;
    std::uint64_t acc = 1;
    while (n > 0 || k > 0) {
        const std::uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t t = 1; t <= kd; ++t) {
            num = num * (nd - kd + t) % p;
            den = den * t % p;
        }
        acc = acc * num % p;
        if (den != 1) acc = acc * detail::pow_mod(den, p - 2, p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<unsigned>(acc);
}

class Field {
public:
    static FieldPtr make(unsigned p, unsigned r, std::uint32_t max_order = kMaxFieldOrder) {
        return FieldPtr(new Field(p, r, max_order));
    }

    unsigned p() const { return p_; }
    unsigned r() const { return r_; }
    std::uint32_t q() const { return q_; }
    bool prime_field() const { return r_ == 1; }
    const std::vector<unsigned>& modulus() const { return modulus_; }
    Elem alpha() const { return alpha_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const {
        check_elem(a);
        check_elem(b);
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
        return add_digits(a, b);
    }

    Elem neg(Elem a) const {
        check_elem(a);
        return neg_table_[a];
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        check_elem(a);
        check_elem(b);
        if (a == 0 || b == 0) return 0;
        return exp_table_[std::uint32_t(log_table_[a]) + log_table_[b]];
    }

    Elem inv(Elem a) const {
        check_elem(a);
        if (a == 0) throw DivisionByZeroError("inv(0) in F_q");
        return exp_table_[(q_ - 1) - log_table_[a]];
    }

    Elem div(Elem a, Elem b) const {
        if (b == 0) throw DivisionByZeroError("division by zero in F_q");
        return mul(a, inv(b));
    }

    // pow accepts any integer exponent; negative exponents need a nonzero base.
    // 0^0 is 1 (the convention the coefficient sums of the a_{i,d} table rely on).
    Elem pow(Elem a, long long e) const {
        check_elem(a);
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw DivisionByZeroError("pow(0, e) with negative e");
        }
        const long long ord = static_cast<long long>(q_) - 1; // >= 1
        long long red = e % ord;
        if (red < 0) red += ord;
        return exp_table_[std::uint64_t(log_table_[a]) * std::uint64_t(red) % std::uint64_t(ord)];
    }

    // n mod p embedded as a constant of the polynomial basis.
    Elem scalar(long long n) const {
        long long v = n % static_cast<long long>(p_);
        if (v < 0) v += p_;
        return static_cast<Elem>(v);
    }

    unsigned log(Elem a) const {
        check_elem(a);
        if (a == 0) throw DivisionByZeroError("log(0) undefined");
        return log_table_[a];
    }

    Elem exp(std::uint64_t k) const { return exp_table_[k % (q_ - 1)]; }

    // Polynomial-basis coefficient vector of length r.
    std::vector<unsigned> rep(Elem a) const {
        check_elem(a);
        std::vector<unsigned> c(r_, 0);
        std::uint32_t v = a;
        for (unsigned i = 0; i < r_; ++i) {
            c[i] = v % p_;
            v /= p_;
        }
        return c;
    }

    // Field enumeration: natural for r = 1, primitive for r > 1.
    Elem beta(std::uint32_t k) const {
        if (k >= q_) throw IndexOutOfRangeError("beta: index out of [0, q-1]");
        return beta_[k];
    }
    std::uint32_t beta_index(Elem e) const {
        check_elem(e);
        return beta_index_[e];
    }

    // The primitive enumeration: beta_0 = 0, beta_k = alpha^(k-1).
    Elem beta_primitive(std::uint32_t k) const {
        if (k >= q_) throw IndexOutOfRangeError("beta_primitive: index out of [0, q-1]");
        return k == 0 ? Elem(0) : exp_table_[k - 1];
    }
    std::uint32_t beta_primitive_index(Elem e) const {
        check_elem(e);
        return e == 0 ? 0u : log_table_[e] + 1u;
    }

private:
    Field(unsigned p, unsigned r, std::uint32_t max_order) : p_(p), r_(r) {
        if (!is_prime(p)) throw NonPrimeError("field characteristic must be prime");
        if (r < 1) throw Error("extension degree must be >= 1");
        if (max_order > kMaxFieldOrder) max_order = kMaxFieldOrder;
        std::uint64_t q = 1;
        for (unsigned i = 0; i < r; ++i) {
            q *= p;
            if (q > max_order) throw SizeExceededError("p^r exceeds the field-order ceiling");
        }
        q_ = static_cast<std::uint32_t>(q);

        find_modulus();
        find_alpha_and_tables();

        neg_table_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            if (p_ == 2) {
                neg_table_[a] = static_cast<Elem>(a);
            } else {
                std::uint32_t v = a, out = 0, pw = 1;
                while (v) {
                    out += ((p_ - v % p_) % p_) * pw;
                    pw *= p_;
                    v /= p_;
                }
                neg_table_[a] = static_cast<Elem>(out);
            }
        }

        if (p_ != 2 && q_ <= 2048) {
            add_table_.resize(std::size_t(q_) * q_);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (std::uint32_t b = 0; b < q_; ++b)
                    add_table_[std::size_t(a) * q_ + b] = add_digits(Elem(a), Elem(b));
        }

        beta_.resize(q_);
        beta_index_.resize(q_);
        for (std::uint32_t k = 0; k < q_; ++k)
            beta_[k] = r_ == 1 ? static_cast<Elem>(k) : beta_primitive(k);
        for (std::uint32_t k = 0; k < q_; ++k) beta_index_[beta_[k]] = k;
    }

    void check_elem(Elem a) const {
        if (a >= q_) throw IndexOutOfRangeError("element encoding out of [0, q)");
    }

    Elem add_digits(Elem a, Elem b) const {
        std::uint32_t x = a, y = b, out = 0, pw = 1;
        while (x || y) {
            out += ((x % p_) + (y % p_)) % p_ * pw;
            pw *= p_;
            x /= p_;
            y /= p_;
        }
        return static_cast<Elem>(out);
    }

    void find_modulus() {
        const std::uint64_t lowparts = q_; // p^r of them
        for (std::uint64_t low = 0; low < lowparts; ++low) {
            detail::PolyFp f(r_ + 1, 0);
            std::uint64_t v = low;
            for (unsigned i = 0; i < r_; ++i) {
                f[i] = static_cast<unsigned>(v % p_);
                v /= p_;
            }
            f[r_] = 1;
            if (detail::poly_irreducible_fp(f, p_)) {
                modulus_ = f;
                return;
            }
        }
        throw Error("no irreducible modulus found"); // unreachable for prime p
    }

    Elem raw_mul(Elem a, Elem b) const {
        auto pa = detail::poly_decode_fp(a, p_);
        auto pb = detail::poly_decode_fp(b, p_);
        auto prod = detail::poly_rem_fp(detail::poly_mul_fp(pa, pb, p_), modulus_, p_);
        return static_cast<Elem>(detail::poly_encode_fp(prod, p_));
    }

    Elem raw_pow(Elem a, std::uint64_t e) const {
        Elem acc = 1, base = a;
        while (e) {
            if (e & 1) acc = raw_mul(acc, base);
            base = raw_mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    void find_alpha_and_tables() {
        std::vector<std::uint32_t> prime_factors;
        std::uint32_t n = q_ - 1;
        for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) prime_factors.push_back(n);

        alpha_ = 0;
        for (std::uint32_t cand = 1; cand < q_; ++cand) {
            bool primitive = true;
            for (auto f : prime_factors)
                if (raw_pow(static_cast<Elem>(cand), (q_ - 1) / f) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                alpha_ = static_cast<Elem>(cand);
                break;
            }
        }
        if (alpha_ == 0) throw Error("no primitive element found"); // unreachable

        exp_table_.assign(2 * std::size_t(q_ - 1), 0);
        log_table_.assign(q_, 0);
        Elem cur = 1;
        for (std::uint32_t k = 0; k < q_ - 1; ++k) {
            exp_table_[k] = cur;
            log_table_[cur] = static_cast<std::uint16_t>(k);
            cur = raw_mul(cur, alpha_);
        }
        if (cur != 1) throw Error("alpha order mismatch"); // unreachable
        for (std::uint32_t k = 0; k < q_ - 1; ++k) exp_table_[q_ - 1 + k] = exp_table_[k];
    }

    unsigned p_ = 0;
    unsigned r_ = 0;
    std::uint32_t q_ = 0;
    std::vector<unsigned> modulus_;
    Elem alpha_ = 0;
    std::vector<Elem> exp_table_;
    std::vector<std::uint16_t> log_table_;
    std::vector<Elem> neg_table_;
    std::vector<Elem> add_table_;
    std::vector<Elem> beta_;
    std::vector<std::uint32_t> beta_index_;
};

inline bool same_field(const Field& a, const Field& b) {
    return a.p() == b.p() && a.r() == b.r() && a.modulus() == b.modulus();
}

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b || !same_field(*a, *b)) throw FieldMismatchError("operands belong to different fields");
}

// Factor q as p^r; rejects anything that is not a prime power.
inline std::pair<unsigned, unsigned> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw Error("q must be a prime power >= 2");
    unsigned p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = static_cast<unsigned>(d);
            break;
        }
    if (p == 0) return {static_cast<unsigned>(q), 1};
    unsigned r = 0;
    while (q % p == 0) {
        q /= p;
        ++r;
    }
    if (q != 1) throw Error("q is not a prime power");
    return {p, r};
}

inline FieldPtr make_field_q(std::uint64_t q, std::uint32_t max_order = kMaxFieldOrder) {
    auto [p, r] = factor_prime_power(q);
    return Field::make(p, r, max_order);
}

} // namespace grm
