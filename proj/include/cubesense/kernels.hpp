#pragma once

// Bit-parallel kernels for small n (n <= 6): a whole subset of Q_n fits in
// one 64-bit word, bit v = membership of vertex v.  These are the inner
// loops of the exhaustive verifiers; the VertexSet operations in core.hpp
// are the general-n reference.

#include <cstdint>

#include "cubesense/core.hpp"

namespace cubesense::kernels {

inline constexpr int kMaxMaskN = 6;

inline void check_mask_dim(int n) {
    if (n < 1 || n > kMaxMaskN)
        throw std::invalid_argument("mask kernels require 1 <= n <= 6");
}

inline std::uint64_t universe_mask(int n) {
    int bits = 1 << n;
    return bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

inline int degree(int n, std::uint64_t mask, int v) {
    int deg = 0;
    for (int i = 0; i < n; ++i)
        deg += (mask >> (v ^ (1 << i))) & 1;
    return deg;
}

// delta; mask must be nonempty.
inline int min_degree(int n, std::uint64_t mask) {
    int best = n;
    std::uint64_t bits = mask;
    while (bits) {
        int v = __builtin_ctzll(bits);
        bits &= bits - 1;
        int d = degree(n, mask, v);
        if (d < best) best = d;
        if (best == 0) break;
    }
    return best;
}

inline bool irreducible(int n, std::uint64_t mask) {
    if (!mask) return false;
    unsigned seen0 = 0, seen1 = 0;
    unsigned all = (1u << n) - 1;
    std::uint64_t bits = mask;
    while (bits) {
        unsigned v = static_cast<unsigned>(__builtin_ctzll(bits));
        bits &= bits - 1;
        seen1 |= v;
        seen0 |= ~v & all;
    }
    return seen0 == all && seen1 == all;
}

// Dimension of the subcube equal to mask, or -1 when mask is not a subcube.
inline int subcube_dim(int n, std::uint64_t mask) {
    if (!mask) return -1;
    int sz = __builtin_popcountll(mask);
    if (sz & (sz - 1)) return -1;
    unsigned all = (1u << n) - 1;
    unsigned and_all = all, or_all = 0;
    std::uint64_t bits = mask;
    while (bits) {
        unsigned v = static_cast<unsigned>(__builtin_ctzll(bits));
        bits &= bits - 1;
        and_all &= v;
        or_all |= v;
    }
    unsigned agree = ~(and_all ^ or_all) & all;
    int m = n - __builtin_popcount(agree);
    return sz == (1 << m) ? m : -1;
}

VertexSet to_set(int n, std::uint64_t mask);
std::uint64_t to_mask(const VertexSet& s);  // requires n <= 6

}  // namespace cubesense::kernels
