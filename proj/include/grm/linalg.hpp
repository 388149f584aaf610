#pragma once

// Dense exact linear algebra over F_q. The canonical reduced row echelon
// form is the one subspace representative everything else compares against:
// pivots are 1, pivot columns are cleared elsewhere, pivot columns strictly
// increase, zero rows are dropped to the bottom. Row spaces are equal iff
// their canonical forms are identical.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "grm/gf.hpp"

namespace grm {

class MatrixGF {
public:
    MatrixGF(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static MatrixGF from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        MatrixGF out(std::move(f), r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw ShapeMismatchError("ragged rows");
            std::copy(rows[i].begin(), rows[i].end(), out.a_.begin() + i * c);
        }
        return out;
    }

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Elem> v) {
        if (v.size() != cols_) throw ShapeMismatchError("row length mismatch");
        a_.insert(a_.end(), v.begin(), v.end());
        ++rows_;
    }

    bool operator==(const MatrixGF& o) const {
        return same_field(*f_, *o.f_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const MatrixGF& o) const { return !(*this == o); }

private:
    FieldPtr f_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

struct RrefResult {
    MatrixGF mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

inline RrefResult rref(MatrixGF m) {
    const FieldPtr& f = m.field();
    const bool char2 = f->p() == 2;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pr = lead;
        while (pr < rows && m.at(pr, col) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != lead)
            for (std::size_t c = col; c < cols; ++c) std::swap(m.at(pr, c), m.at(lead, c));
        const Elem pv = m.at(lead, col);
        if (pv != 1) {
            const Elem inv = f->inv(pv);
            for (std::size_t c = col; c < cols; ++c) m.at(lead, c) = f->mul(m.at(lead, c), inv);
        }
        auto prow = m.row(lead);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead) continue;
            const Elem factor = m.at(r, col);
            if (factor == 0) continue;
            auto row = m.row(r);
            if (char2) {
                if (factor == 1)
                    for (std::size_t c = col; c < cols; ++c) row[c] ^= prow[c];
                else
                    for (std::size_t c = col; c < cols; ++c) row[c] ^= f->mul(factor, prow[c]);
            } else {
                for (std::size_t c = col; c < cols; ++c)
                    row[c] = f->sub(row[c], f->mul(factor, prow[c]));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    return RrefResult{std::move(m), pivots.size(), std::move(pivots)};
}

inline std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

// Drop the zero rows of an RREF; the canonical subspace representative.
inline MatrixGF canonical_rowspace(const RrefResult& r) {
    MatrixGF out(r.mat.field(), 0, r.mat.cols());
    for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.mat.row(i));
    return out;
}

inline MatrixGF canonical_rowspace(const MatrixGF& m) { return canonical_rowspace(rref(m)); }

// Residual of v after elimination against an RREF.
inline std::vector<Elem> reduce_against(const RrefResult& r, std::span<const Elem> v) {
    if (v.size() != r.mat.cols()) throw ShapeMismatchError("vector length != column count");
    const FieldPtr& f = r.mat.field();
    std::vector<Elem> residual(v.begin(), v.end());
    for (std::size_t k = 0; k < r.rank; ++k) {
        const std::size_t col = r.pivot_cols[k];
        const Elem factor = residual[col];
        if (factor == 0) continue;
        auto prow = r.mat.row(k);
        for (std::size_t c = col; c < residual.size(); ++c)
            residual[c] = f->sub(residual[c], f->mul(factor, prow[c]));
    }
    return residual;
}

inline bool is_zero_vector(std::span<const Elem> v) {
    for (auto c : v)
        if (c) return false;
    return true;
}

inline bool in_rowspace(const RrefResult& r, std::span<const Elem> v) {
    return is_zero_vector(reduce_against(r, v));
}

inline bool in_rowspace(const MatrixGF& m, std::span<const Elem> v) {
    return in_rowspace(rref(m), v);
}

inline void check_comparable(const MatrixGF& a, const MatrixGF& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.cols()) throw ShapeMismatchError("column count mismatch");
}

// rowspace(a) <= rowspace(b): every row of a reduces to zero against rref(b).
inline bool rowspace_leq(const MatrixGF& a, const MatrixGF& b) {
    check_comparable(a, b);
    const RrefResult rb = rref(b);
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (!in_rowspace(rb, a.row(r))) return false;
    return true;
}

inline bool same_rowspace(const MatrixGF& a, const MatrixGF& b) {
    check_comparable(a, b);
    return canonical_rowspace(a) == canonical_rowspace(b);
}

// FNV-1a over the canonical form; a stable cross-run subspace identity.
inline std::string fingerprint(const MatrixGF& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(canonical.field()->q());
    mix(canonical.rows());
    mix(canonical.cols());
    for (std::size_t r = 0; r < canonical.rows(); ++r)
        for (std::size_t c = 0; c < canonical.cols(); ++c) mix(canonical.at(r, c));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace grm
