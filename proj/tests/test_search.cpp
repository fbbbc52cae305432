#include "doctest.h"

#include "cubesense/automorphism.hpp"
#include "cubesense/constructions.hpp"
#include "cubesense/kernels.hpp"
#include "cubesense/search.hpp"
#include "oracles.hpp"

using namespace cubesense;

namespace {

SearchConfig make_cfg(int n, int d, DegreeMode mode, bool irr, Strategy strat) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.d = d;
    cfg.degree_mode = mode;
    cfg.require_irreducible = irr;
    cfg.strategy = strat;
    return cfg;
}

}  // namespace

TEST_CASE("mask_qualifies") {
    SearchConfig cfg = make_cfg(2, 1, DegreeMode::exact, true, Strategy::exhaustive);
    CHECK_FALSE(mask_qualifies(cfg, 0));
    CHECK_FALSE(mask_qualifies(cfg, 0b0011));     // a 1-subcube is reducible
    CHECK(mask_qualifies(cfg, 0b0111));           // {00,01,10}: delta 1, irreducible
    CHECK_FALSE(mask_qualifies(cfg, 0b1111));     // full square has delta 2
    cfg.degree_mode = DegreeMode::at_least;
    CHECK(mask_qualifies(cfg, 0b1111));
    cfg.require_irreducible = false;
    cfg.degree_mode = DegreeMode::exact;
    CHECK(mask_qualifies(cfg, 0b0011));
}

TEST_CASE("frozen minimum sizes") {
    auto out = min_size_search(
        make_cfg(2, 1, DegreeMode::exact, true, Strategy::exhaustive));
    CHECK(out.status == SearchStatus::found);
    CHECK(out.size == 3);
    CHECK(out.subsets_examined == 15);
    CHECK(out.witness_mask == canonical_mask(2, out.witness_mask));
    CHECK(mask_qualifies(
        make_cfg(2, 1, DegreeMode::exact, true, Strategy::exhaustive),
        out.witness_mask));

    out = min_size_search(
        make_cfg(3, 2, DegreeMode::exact, true, Strategy::exhaustive));
    CHECK(out.status == SearchStatus::found);
    CHECK(out.size == 6);

    out = min_size_search(
        make_cfg(1, 0, DegreeMode::exact, true, Strategy::exhaustive));
    CHECK(out.status == SearchStatus::infeasible);
    CHECK(out.subsets_examined == 3);

    // without the irreducibility constraint Simon's bound is attained
    out = min_size_search(
        make_cfg(4, 2, DegreeMode::exact, false, Strategy::exhaustive));
    CHECK(out.status == SearchStatus::found);
    CHECK(out.size == 4);
    CHECK(kernels::subcube_dim(4, out.witness_mask) == 2);
}

TEST_CASE("exhaustive search matches the independent oracle (n <= 3)") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= n; ++d)
            for (bool irr : {false, true})
                for (DegreeMode mode : {DegreeMode::exact, DegreeMode::at_least}) {
                    auto out = min_size_search(
                        make_cfg(n, d, mode, irr, Strategy::exhaustive));
                    auto expect = oracle::min_size(
                        n, d, mode == DegreeMode::exact, irr);
                    if (!expect) {
                        CHECK(out.status == SearchStatus::infeasible);
                    } else {
                        REQUIRE(out.status == SearchStatus::found);
                        CHECK(out.size == *expect);
                    }
                }
}

TEST_CASE("branch-and-bound agrees with exhaustive up to n = 4") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= n; ++d)
            for (bool irr : {false, true})
                for (DegreeMode mode : {DegreeMode::exact, DegreeMode::at_least}) {
                    auto ex = min_size_search(
                        make_cfg(n, d, mode, irr, Strategy::exhaustive));
                    auto bnb = min_size_search(
                        make_cfg(n, d, mode, irr, Strategy::canonical_bnb));
                    CHECK(ex.status == bnb.status);
                    if (ex.status == SearchStatus::found) {
                        CHECK(ex.size == bnb.size);
                        // both report a canonical qualifying witness
                        CHECK(bnb.witness_mask ==
                              canonical_mask(n, bnb.witness_mask));
                        CHECK(mask_qualifies(make_cfg(n, d, mode, irr,
                                                      Strategy::exhaustive),
                                             bnb.witness_mask));
                    }
                }
}

TEST_CASE("branch-and-bound confirms the closed forms at n = 5") {
    for (int d = 0; d <= 2; ++d) {
        auto out = min_size_search(
            make_cfg(5, d, DegreeMode::exact, true, Strategy::canonical_bnb));
        REQUIRE(out.status == SearchStatus::found);
        CHECK(out.size == min_irreducible_size(5, d));
    }
    auto plain = min_size_search(
        make_cfg(5, 3, DegreeMode::exact, false, Strategy::canonical_bnb));
    REQUIRE(plain.status == SearchStatus::found);
    CHECK(plain.size == simon_min_size(5, 3));
}

TEST_CASE("budgets") {
    SearchConfig cfg = make_cfg(3, 2, DegreeMode::exact, true, Strategy::exhaustive);
    cfg.size_budget = 10;
    auto out = min_size_search(cfg);
    CHECK(out.status == SearchStatus::budget_exceeded);
    CHECK(out.subsets_examined == 10);

    cfg = make_cfg(4, 3, DegreeMode::exact, true, Strategy::canonical_bnb);
    cfg.size_budget = 5;
    out = min_size_search(cfg);
    CHECK(out.status == SearchStatus::budget_exceeded);
    CHECK(out.subsets_examined > 5);

    // a generous budget changes nothing
    cfg.size_budget = std::uint64_t{1} << 40;
    out = min_size_search(cfg);
    REQUIRE(out.status == SearchStatus::found);
    CHECK(out.size == min_irreducible_size(4, 3));
}

TEST_CASE("serial and parallel searches return identical outcomes") {
    for (Strategy strat : {Strategy::exhaustive, Strategy::canonical_bnb})
        for (int d = 0; d <= 4; ++d) {
            SearchConfig cfg =
                make_cfg(4, d, DegreeMode::exact, true, strat);
            cfg.parallel = false;
            auto serial = min_size_search(cfg);
            cfg.parallel = true;
            auto parallel = min_size_search(cfg);
            CHECK(serial.status == parallel.status);
            CHECK(serial.size == parallel.size);
            CHECK(serial.witness_mask == parallel.witness_mask);
            CHECK(serial.subsets_examined == parallel.subsets_examined);
        }
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(min_size_search(make_cfg(5, 1, DegreeMode::exact, false,
                                             Strategy::exhaustive)),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_size_search(make_cfg(7, 1, DegreeMode::exact, false,
                                             Strategy::canonical_bnb)),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_size_search(make_cfg(3, 4, DegreeMode::exact, false,
                                             Strategy::exhaustive)),
                    std::invalid_argument);
}
