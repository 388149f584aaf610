#pragma once

// Generalized Reed-Muller codes C_nu(m,q) as row spaces of evaluation
// generator matrices: one row per monomial Y^j with |j| <= nu (rank order of
// j), one column per evaluation point (rank order of the point's index under
// the field enumeration). Rows are kept as raw monomial evaluations, not an
// echelon basis; canonicalization happens only inside comparisons.

#include <cstdint>
#include <vector>

#include "grm/algebra.hpp"
#include "grm/gf.hpp"
#include "grm/linalg.hpp"
#include "grm/multiindex.hpp"

namespace grm {

struct CodeSpec {
    FieldPtr field;
    unsigned m = 0;
    std::uint32_t nu = 0;

    CodeSpec(FieldPtr f, unsigned m_, std::uint32_t nu_) : field(std::move(f)), m(m_), nu(nu_) {
        if (m == 0) throw ArityMismatchError("code needs at least one variable");
        if (nu > static_cast<std::uint32_t>(m) * (field->q() - 1))
            throw IndexOutOfRangeError("code order out of [0, m(q-1)]");
    }
};

struct GeneratorMatrix {
    CodeSpec spec;
    std::vector<MultiIndex> monomials; // row labels, rank order
    MatrixGF mat;
};

inline GeneratorMatrix grm_generator(const CodeSpec& spec,
                                     std::uint64_t max_points = kDefaultMaxPoints) {
    const FieldPtr& f = spec.field;
    const std::uint32_t q = f->q();
    const unsigned m = spec.m;
    std::uint64_t n = 1;
    for (unsigned l = 0; l < m; ++l) {
        if (n > max_points / q) throw SizeExceededError("q^m exceeds the configured ceiling");
        n *= q;
    }

    // beta_e^j for all e, j; evaluation rows are products of these.
    std::vector<std::vector<Elem>> pw(q, std::vector<Elem>(q, 0));
    for (std::uint32_t e = 0; e < q; ++e)
        for (std::uint32_t j = 0; j < q; ++j) pw[e][j] = f->pow(f->beta(e), j);

    std::vector<MultiIndex> monomials;
    for (std::uint64_t rank = 0; rank < n; ++rank) {
        MultiIndex j = monomial_unrank(q, m, rank);
        if (weight(j) <= spec.nu) monomials.push_back(std::move(j));
    }

    MatrixGF mat(f, monomials.size(), n);
    for (std::size_t r = 0; r < monomials.size(); ++r) {
        const MultiIndex& j = monomials[r];
        for (std::uint64_t col = 0; col < n; ++col) {
            const MultiIndex i = monomial_unrank(q, m, col);
            Elem v = 1;
            for (unsigned l = 0; l < m; ++l) v = f->mul(v, pw[i[l]][j[l]]);
            mat.at(r, col) = v;
        }
    }
    return GeneratorMatrix{spec, std::move(monomials), std::move(mat)};
}

inline bool code_contains(const GeneratorMatrix& g, std::span<const Elem> v) {
    if (v.size() != g.mat.cols()) throw LengthMismatchError("word length != code length");
    return in_rowspace(g.mat, v);
}

// Dimensions of C_0 < C_1 < ... < C_{m(q-1)}; verifies strict growth from 1
// to q^m and the containment of each step before returning.
inline std::vector<std::uint64_t> inclusion_chain(const FieldPtr& f, unsigned m,
                                                  std::uint64_t max_points = kDefaultMaxPoints) {
    const std::uint32_t top = static_cast<std::uint32_t>(m) * (f->q() - 1);
    std::vector<std::uint64_t> dims;
    MatrixGF prev(f, 0, 0);
    for (std::uint32_t nu = 0; nu <= top; ++nu) {
        GeneratorMatrix g = grm_generator(CodeSpec(f, m, nu), max_points);
        const RrefResult r = rref(g.mat);
        if (r.rank != code_dim_count(f->q(), m, nu))
            throw Error("generator rank disagrees with the counting dimension");
        if (nu > 0) {
            if (!rowspace_leq(prev, g.mat)) throw Error("inclusion chain violated");
            if (r.rank <= dims.back()) throw Error("inclusion chain not strictly increasing");
        }
        dims.push_back(r.rank);
        prev = std::move(g.mat);
    }
    return dims;
}

// Stack algebra elements as matrix rows (shared coordinate order).
inline MatrixGF stack_rows(const FieldPtr& f, const std::vector<AlgebraElement>& elems,
                           std::uint64_t cols) {
    MatrixGF out(f, 0, cols);
    for (const auto& e : elems) out.append_row(e.coeffs());
    return out;
}

inline MatrixGF radical_matrix(const FieldPtr& f, unsigned m, std::uint32_t d,
                               std::uint64_t max_points = kDefaultMaxPoints) {
    const std::uint64_t n = pow_points(f->q(), m, max_points);
    return stack_rows(f, radical_basis(f, m, d, max_points), n);
}

} // namespace grm
