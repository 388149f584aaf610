#pragma once

// Exponent tuples (i_1,...,i_m) with 0 <= i_l <= q-1 and their big-endian
// mixed-radix rank. The rank order doubles as the coordinate order of every
// vector and matrix in this library, so lexicographic tuple order and rank
// order agree by construction.

#include <cstdint>
#include <vector>

#include "grm/errors.hpp"

namespace grm {

using MultiIndex = std::vector<std::uint16_t>;

inline std::uint32_t weight(const MultiIndex& idx) {
    std::uint32_t w = 0;
    for (auto c : idx) w += c;
    return w;
}

// rank(i) = sum_l i_l * q^(m-l), first component most significant.
inline std::uint64_t monomial_rank(std::uint32_t q, const MultiIndex& idx) {
    std::uint64_t r = 0;
    for (auto c : idx) {
        if (c >= q) throw IndexOutOfRangeError("monomial_rank: exponent out of [0, q-1]");
        r = r * q + c;
    }
    return r;
}

inline MultiIndex monomial_unrank(std::uint32_t q, unsigned m, std::uint64_t rank) {
    MultiIndex idx(m, 0);
    for (unsigned l = m; l-- > 0;) {
        idx[l] = static_cast<std::uint16_t>(rank % q);
        rank /= q;
    }
    if (rank != 0) throw IndexOutOfRangeError("monomial_unrank: rank out of [0, q^m)");
    return idx;
}

// theta(i) = (q-1-i_1, ..., q-1-i_m); an involution (Prop-style duality map).
inline MultiIndex theta(std::uint32_t q, const MultiIndex& idx) {
    MultiIndex out(idx.size());
    for (std::size_t l = 0; l < idx.size(); ++l) {
        if (idx[l] >= q) throw IndexOutOfRangeError("theta: exponent out of [0, q-1]");
        out[l] = static_cast<std::uint16_t>(q - 1 - idx[l]);
    }
    return out;
}

// q^m with an overflow-safe ceiling check.
inline std::uint64_t pow_points(std::uint32_t q, unsigned m, std::uint64_t ceiling) {
    std::uint64_t n = 1;
    for (unsigned l = 0; l < m; ++l) {
        if (n > ceiling / q) throw TooManyVariablesError("q^m exceeds the configured ceiling");
        n *= q;
    }
    return n;
}

} // namespace grm
