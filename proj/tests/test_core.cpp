#include "doctest.h"

#include <random>

#include "cubesense/core.hpp"
#include "oracles.hpp"

using namespace cubesense;

namespace {

Vertex v_of(int n, const char* bits) {
    Vertex v = 0;
    for (int i = 0; i < n; ++i)
        if (bits[i] == '1') v |= Vertex{1} << i;
    return v;
}

VertexSet set_of(int n, std::initializer_list<const char*> strs) {
    VertexSet s(n);
    for (const char* str : strs) s.insert(v_of(n, str));
    return s;
}

VertexSet random_vertex_set(int n, std::mt19937_64& rng, bool nonempty = true) {
    VertexSet s(n);
    std::bernoulli_distribution coin(0.5);
    for (Vertex v = 0; v < s.universe_size(); ++v)
        if (coin(rng)) s.insert(v);
    if (nonempty && s.empty())
        s.insert(static_cast<Vertex>(rng() % s.universe_size()));
    return s;
}

}  // namespace

TEST_CASE("flip") {
    CHECK(vertex_string(3, flip(3, v_of(3, "000"), 1)) == "100");
    CHECK(vertex_string(3, flip(3, v_of(3, "101"), 2)) == "111");
    CHECK_THROWS_AS(flip(3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(flip(3, 0, 4), std::invalid_argument);

    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 8);
        Vertex v = static_cast<Vertex>(rng() % (1u << n));
        int i = 1 + static_cast<int>(rng() % n);
        CHECK(flip(n, flip(n, v, i), i) == v);
        CHECK(__builtin_popcount(flip(n, v, i) ^ v) == 1);
    }
}

TEST_CASE("degree against flip-enumeration oracle") {
    CHECK(degree(VertexSet::full(3), v_of(3, "000")) == 3);
    // frozen from the naive oracle
    VertexSet s = set_of(3, {"100", "110", "101", "011"});
    CHECK(oracle::degree(3, {1, 3, 5, 6}, 1) == 2);
    CHECK(degree(s, v_of(3, "100")) == 2);
    CHECK(degree(set_of(2, {"00", "11"}), v_of(2, "00")) == 0);
    CHECK_THROWS_AS(degree(s, v_of(3, "000")), std::invalid_argument);

    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        oracle::VSet ref = oracle::random_set(n, rng);
        if (ref.empty()) continue;
        VertexSet vs = oracle::to_vertex_set(n, ref);
        for (unsigned v : ref)
            CHECK(degree(vs, v) == oracle::degree(n, ref, v));
    }
}

TEST_CASE("min_degree and set_sensitivity") {
    VertexSet s = set_of(3, {"000", "001", "110", "111"});
    CHECK(min_degree(s) == 1);
    CHECK(set_sensitivity(s) == 2);
    CHECK(set_sensitivity(VertexSet::full(4)) == 0);
    CHECK_THROWS_AS(min_degree(VertexSet(3)), std::domain_error);
    CHECK_THROWS_AS(set_sensitivity(VertexSet(2)), std::domain_error);

    // subcubes have minimum degree equal to their dimension
    for (int n = 1; n <= 6; ++n)
        for (int fixed = 0; fixed < (1 << n); ++fixed) {
            Subcube c = make_subcube(n, fixed, 0);
            CHECK(min_degree(subcube_vertices(c)) == c.dimension());
        }

    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        oracle::VSet ref = oracle::random_set(n, rng);
        if (ref.empty()) continue;
        CHECK(min_degree(oracle::to_vertex_set(n, ref)) ==
              oracle::min_degree(n, ref));
    }
}

TEST_CASE("degree-boundary partition: deg + out-neighbors = n") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        VertexSet s = random_vertex_set(n, rng);
        s.for_each([&](Vertex v) {
            int out = 0;
            for (int i = 1; i <= n; ++i)
                if (!s.contains(flip(n, v, i))) ++out;
            CHECK(degree(s, v) + out == n);
        });
    }
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(VertexSet::full(3)));
    CHECK(is_irreducible(set_of(3, {"000", "111"})));
    CHECK_FALSE(is_irreducible(subcube_vertices(make_subcube(3, 0b001, 0))));
    CHECK_FALSE(is_irreducible(VertexSet(3)));

    // equivalent to every half-restriction being nonempty
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        VertexSet s = random_vertex_set(n, rng, false);
        bool all_halves = true;
        for (int i = 1; i <= n; ++i)
            for (int b = 0; b <= 1; ++b)
                if (half_restrict(s, i, b).empty()) all_halves = false;
        CHECK(is_irreducible(s) == all_halves);
    }
}

TEST_CASE("as_subcube recognition") {
    auto c = as_subcube(set_of(2, {"00", "01"}));
    REQUIRE(c.has_value());
    CHECK(c->fixed_mask == 0b01);
    CHECK(c->fixed_values == 0);
    CHECK(c->dimension() == 1);

    CHECK_FALSE(as_subcube(set_of(2, {"00", "11"})).has_value());
    CHECK_FALSE(as_subcube(VertexSet(2)).has_value());

    auto full = as_subcube(VertexSet::full(3));
    REQUIRE(full.has_value());
    CHECK(full->fixed_mask == 0);
    CHECK(full->dimension() == 3);

    // round trip over all subcubes of Q_n, n <= 5
    for (int n = 1; n <= 5; ++n)
        for (int mask = 0; mask < (1 << n); ++mask)
            for (int vals = mask;; vals = (vals - 1) & mask) {
                Subcube c2 = make_subcube(n, mask, vals & mask);
                auto back = as_subcube(subcube_vertices(c2));
                REQUIRE(back.has_value());
                CHECK(*back == c2);
                if (vals == 0) break;
            }

    // presence implies power-of-two size and matching min degree
    std::mt19937_64 rng(6);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        VertexSet s = random_vertex_set(n, rng);
        if (auto sc = as_subcube(s)) {
            std::uint64_t sz = s.size();
            CHECK((sz & (sz - 1)) == 0);
            CHECK(min_degree(s) == sc->dimension());
        }
    }
}

TEST_CASE("subcube_vertices") {
    CHECK(subcube_vertices(make_subcube(2, 0b01, 0)) == set_of(2, {"00", "01"}));
    CHECK(subcube_vertices(make_subcube(1, 0, 0)) == VertexSet::full(1));
    CHECK(subcube_vertices(make_subcube(3, 0b110, 0b010)) ==
          set_of(3, {"010", "110"}));
    CHECK_THROWS_AS(make_subcube(3, 0b001, 0b010), std::invalid_argument);
}

TEST_CASE("are_adjacent") {
    CHECK(are_adjacent(make_subcube(2, 0b01, 0b00), make_subcube(2, 0b01, 0b01)));
    CHECK_FALSE(
        are_adjacent(make_subcube(2, 0b01, 0b00), make_subcube(2, 0b10, 0b00)));
    CHECK_FALSE(
        are_adjacent(make_subcube(2, 0b11, 0b00), make_subcube(2, 0b11, 0b11)));
    CHECK_THROWS_AS(
        are_adjacent(make_subcube(2, 0, 0), make_subcube(3, 0, 0)),
        std::invalid_argument);
}

TEST_CASE("half_restrict") {
    VertexSet s = set_of(3, {"000", "001", "110", "111"});
    CHECK(half_restrict(s, 1, 0) == set_of(2, {"00", "01"}));
    CHECK(half_restrict(set_of(3, {"000", "111"}), 2, 1) == set_of(2, {"11"}));
    CHECK_THROWS_AS(half_restrict(s, 4, 0), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        VertexSet a = random_vertex_set(n, rng, false);
        int i = 1 + static_cast<int>(rng() % n);
        // partition of sizes
        CHECK(a.size() ==
              half_restrict(a, i, 0).size() + half_restrict(a, i, 1).size());
        // commutes with set algebra
        VertexSet b = random_vertex_set(n, rng, false);
        CHECK(half_restrict(set_union(a, b), i, 1) ==
              set_union(half_restrict(a, i, 1), half_restrict(b, i, 1)));
        CHECK(half_restrict(set_intersection(a, b), i, 0) ==
              set_intersection(half_restrict(a, i, 0), half_restrict(b, i, 0)));
        CHECK(half_restrict(set_difference(a, b), i, 1) ==
              set_difference(half_restrict(a, i, 1), half_restrict(b, i, 1)));
    }
}

TEST_CASE("set algebra") {
    CHECK(set_intersection(set_of(2, {"00", "01"}), set_of(2, {"01", "11"})) ==
          set_of(2, {"01"}));
    VertexSet s = set_of(2, {"00", "01"});
    CHECK(set_difference(s, s) == VertexSet(2));
    CHECK(set_union(set_of(2, {"00"}), set_of(2, {"11"})) ==
          set_of(2, {"00", "11"}));
    CHECK_THROWS_AS(set_union(VertexSet(2), VertexSet(3)),
                    std::invalid_argument);
    // sets of different dimension never compare equal
    CHECK_FALSE(VertexSet(2) == VertexSet(3));
}
