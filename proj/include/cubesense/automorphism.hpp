#pragma once

// Signed permutations of coordinates: the automorphism group of Q_n
// (order 2^n * n!).  Canonicalization is a brute-force minimum image over
// the full group, capped at n <= 6 (46080 elements).

#include <array>
#include <cstdint>
#include <vector>

#include "cubesense/core.hpp"

namespace cubesense {

inline constexpr int kMaxCanonN = 6;

struct Automorphism {
    int n = 0;
    std::array<std::uint8_t, 32> perm{};  // coordinate i -> perm[i], 0-based
    std::uint32_t flips = 0;

    // permute coordinates, then XOR the flip mask
    Vertex apply(Vertex v) const {
        Vertex out = 0;
        for (int i = 0; i < n; ++i)
            out |= ((v >> i) & 1u) << perm[i];
        return out ^ flips;
    }

    Automorphism inverse() const;
    static Automorphism identity(int n);

    bool operator==(const Automorphism&) const = default;
};

// a after b: (a * b)(v) = a(b(v)).
Automorphism compose(const Automorphism& a, const Automorphism& b);

VertexSet apply_automorphism(const Automorphism& g, const VertexSet& S);

// Vertex maps of the full group, in a fixed deterministic order.
// Element e maps vertex v to aut_vertex_maps(n)[e][v].
const std::vector<std::array<std::uint8_t, 64>>& aut_vertex_maps(int n);

// Minimum bitmap image over the full group, bitmaps compared as integers.
std::uint64_t canonical_mask(int n, std::uint64_t mask);
VertexSet canonical_form(const VertexSet& S);

}  // namespace cubesense
