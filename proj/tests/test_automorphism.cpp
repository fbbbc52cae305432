#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cubesense/automorphism.hpp"
#include "cubesense/kernels.hpp"

using namespace cubesense;

namespace {

Automorphism random_aut(int n, std::mt19937_64& rng) {
    Automorphism g = Automorphism::identity(n);
    std::array<std::uint8_t, 32> p{};
    std::iota(p.begin(), p.begin() + n, 0);
    std::shuffle(p.begin(), p.begin() + n, rng);
    g.perm = p;
    g.flips = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
    return g;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("group order and bijectivity of the vertex maps") {
    for (int n = 1; n <= 5; ++n) {
        const auto& maps = aut_vertex_maps(n);
        CHECK(maps.size() == (std::uint64_t{1} << n) * factorial(n));
        // each element is a permutation of the vertices; all are distinct
        std::set<std::array<std::uint8_t, 64>> distinct;
        for (const auto& m : maps) {
            std::set<std::uint8_t> image(m.begin(), m.begin() + (1 << n));
            CHECK(image.size() == (1u << n));
            distinct.insert(m);
        }
        CHECK(distinct.size() == maps.size());
    }
}

TEST_CASE("apply, inverse and composition") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        Automorphism a = random_aut(n, rng);
        Automorphism b = random_aut(n, rng);
        Automorphism ai = a.inverse();
        Automorphism ab = compose(a, b);
        for (int rep = 0; rep < 8; ++rep) {
            Vertex v = static_cast<Vertex>(rng() % (1u << n));
            CHECK(ai.apply(a.apply(v)) == v);
            CHECK(a.apply(ai.apply(v)) == v);
            CHECK(ab.apply(v) == a.apply(b.apply(v)));
            // automorphisms preserve Hamming adjacency
            int i = 1 + static_cast<int>(rng() % n);
            Vertex w = flip(n, v, i);
            CHECK(__builtin_popcount(a.apply(v) ^ a.apply(w)) == 1);
        }
        CHECK(compose(a, ai) == Automorphism::identity(n));
    }
}

TEST_CASE("apply_automorphism preserves structural invariants") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 80; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        std::uint64_t mask = rng() & kernels::universe_mask(n);
        if (!mask) mask = 1;
        VertexSet s = kernels::to_set(n, mask);
        Automorphism g = random_aut(n, rng);
        VertexSet img = apply_automorphism(g, s);
        CHECK(img.size() == s.size());
        CHECK(min_degree(img) == min_degree(s));
        CHECK(is_irreducible(img) == is_irreducible(s));
        CHECK(as_subcube(img).has_value() == as_subcube(s).has_value());
    }
}

TEST_CASE("canonical_mask is an orbit invariant") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 120; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        std::uint64_t mask = rng() & kernels::universe_mask(n);
        std::uint64_t canon = canonical_mask(n, mask);
        // idempotent
        CHECK(canonical_mask(n, canon) == canon);
        // never larger than the input, invariant under random group elements
        CHECK(canon <= mask);
        Automorphism g = random_aut(n, rng);
        std::uint64_t img =
            kernels::to_mask(apply_automorphism(g, kernels::to_set(n, mask)));
        CHECK(canonical_mask(n, img) == canon);
    }
    CHECK(canonical_mask(3, 0) == 0);
}

TEST_CASE("canonical form is a true orbit minimum for small orbits") {
    // brute-force the orbit through the cached vertex maps
    std::mt19937_64 rng(24);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + static_cast<int>(rng() % 2);
        std::uint64_t mask = rng() & kernels::universe_mask(n);
        std::uint64_t lo = ~std::uint64_t{0};
        for (const auto& m : aut_vertex_maps(n)) {
            std::uint64_t img = 0;
            for (int v = 0; v < (1 << n); ++v)
                if ((mask >> v) & 1) img |= std::uint64_t{1} << m[v];
            lo = std::min(lo, img);
        }
        if (mask == 0) lo = 0;
        CHECK(canonical_mask(n, mask) == lo);
    }
}

TEST_CASE("canonicalization cap") {
    CHECK_THROWS_AS(canonical_form(VertexSet(7)), std::invalid_argument);
    CHECK_THROWS_AS(aut_vertex_maps(7), std::invalid_argument);
    // at the cap itself it still works
    CHECK(canonical_mask(6, std::uint64_t{1} << 63) == 1);
}
