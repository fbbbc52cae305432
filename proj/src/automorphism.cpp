#include "cubesense/automorphism.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace cubesense {

Automorphism Automorphism::identity(int n) {
    check_dim(n);
    Automorphism g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.perm[i] = static_cast<std::uint8_t>(i);
    return g;
}

Automorphism Automorphism::inverse() const {
    // g(v) = pi(v) ^ f  =>  g^{-1}(w) = pi^{-1}(w) ^ pi^{-1}(f)
    Automorphism inv;
    inv.n = n;
    for (int i = 0; i < n; ++i) inv.perm[perm[i]] = static_cast<std::uint8_t>(i);
    Vertex mapped = 0;
    for (int i = 0; i < n; ++i)
        mapped |= ((flips >> perm[i]) & 1u) << i;
    inv.flips = mapped;
    return inv;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    if (a.n != b.n)
        throw std::invalid_argument("compose: dimension mismatch");
    Automorphism c;
    c.n = a.n;
    for (int i = 0; i < a.n; ++i)
        c.perm[i] = a.perm[b.perm[i]];
    Vertex mapped = 0;
    for (int i = 0; i < a.n; ++i)
        mapped |= ((b.flips >> i) & 1u) << a.perm[i];
    c.flips = mapped ^ a.flips;
    return c;
}

VertexSet apply_automorphism(const Automorphism& g, const VertexSet& S) {
    if (g.n != S.dim())
        throw std::invalid_argument("apply_automorphism: dimension mismatch");
    VertexSet out(S.dim());
    S.for_each([&](Vertex v) { out.insert(g.apply(v)); });
    return out;
}

namespace {

std::vector<std::array<std::uint8_t, 64>> build_group(int n) {
    std::vector<std::array<std::uint8_t, 64>> maps;
    std::array<std::uint8_t, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    int vertices = 1 << n;
    do {
        for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
            std::array<std::uint8_t, 64> vm{};
            for (int v = 0; v < vertices; ++v) {
                std::uint32_t out = 0;
                for (int i = 0; i < n; ++i)
                    out |= ((static_cast<std::uint32_t>(v) >> i) & 1u) << perm[i];
                vm[v] = static_cast<std::uint8_t>(out ^ flips);
            }
            maps.push_back(vm);
        }
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return maps;
}

std::array<std::vector<std::array<std::uint8_t, 64>>, kMaxCanonN + 1> g_groups;
std::array<std::once_flag, kMaxCanonN + 1> g_group_once;

}  // namespace

const std::vector<std::array<std::uint8_t, 64>>& aut_vertex_maps(int n) {
    if (n < 1 || n > kMaxCanonN)
        throw std::invalid_argument("canonicalization requires 1 <= n <= 6");
    std::call_once(g_group_once[n], [n] { g_groups[n] = build_group(n); });
    return g_groups[n];
}

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    const auto& group = aut_vertex_maps(n);
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& vm : group) {
        std::uint64_t image = 0;
        std::uint64_t bits = mask;
        while (bits) {
            image |= std::uint64_t{1} << vm[__builtin_ctzll(bits)];
            bits &= bits - 1;
        }
        if (image < best) best = image;
    }
    return mask ? best : 0;
}

VertexSet canonical_form(const VertexSet& S) {
    int n = S.dim();
    if (n > kMaxCanonN)
        throw std::invalid_argument("canonical_form capped at n <= 6");
    std::uint64_t mask = 0;
    S.for_each([&](Vertex v) { mask |= std::uint64_t{1} << v; });
    std::uint64_t canon = canonical_mask(n, mask);
    VertexSet out(n);
    while (canon) {
        out.insert(static_cast<Vertex>(__builtin_ctzll(canon)));
        canon &= canon - 1;
    }
    return out;
}

}  // namespace cubesense
