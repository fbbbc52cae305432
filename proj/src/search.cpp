#include "cubesense/search.hpp"

#include <algorithm>
#include <vector>

#include "cubesense/automorphism.hpp"
#include "cubesense/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cubesense {

namespace {

void check_config(const SearchConfig& cfg) {
    check_dim(cfg.n);
    if (cfg.d < 0 || cfg.d > cfg.n)
        throw std::invalid_argument("search: d must be in [0, n]");
    if (cfg.strategy == Strategy::exhaustive && cfg.n > 4)
        throw std::invalid_argument(
            "exhaustive strategy enumerates 2^(2^n) subsets; requires n <= 4");
    if (cfg.strategy == Strategy::canonical_bnb && cfg.n > kMaxCanonN)
        throw std::invalid_argument("canonical_bnb requires n <= 6");
}

struct Best {
    std::uint64_t size = ~std::uint64_t{0};
    std::uint64_t canon = ~std::uint64_t{0};

    void offer(int n, std::uint64_t mask) {
        std::uint64_t sz = __builtin_popcountll(mask);
        if (sz > size) return;
        std::uint64_t c = canonical_mask(n, mask);
        if (sz < size || c < canon) {
            size = sz;
            canon = c;
        }
    }
    void merge(const Best& o) {
        if (o.size < size || (o.size == size && o.canon < canon)) *this = o;
    }
};

SearchOutcome exhaustive_search(const SearchConfig& cfg) {
    SearchOutcome out;
    std::uint64_t total = (std::uint64_t{1} << (std::uint64_t{1} << cfg.n)) - 1;
    if (cfg.size_budget && *cfg.size_budget < total) {
        // partial enumeration proves nothing; report the budget overrun
        out.status = SearchStatus::budget_exceeded;
        out.subsets_examined = *cfg.size_budget;
        return out;
    }
    aut_vertex_maps(cfg.n);  // warm the group cache before going parallel
    Best best;
    if (cfg.parallel) {
        std::vector<Best> locals;
#ifdef _OPENMP
#pragma omp parallel
        {
#pragma omp single
            locals.resize(omp_get_num_threads());
            Best local;
#pragma omp for schedule(static)
            for (long long mask = 1; mask <= static_cast<long long>(total); ++mask)
                if (mask_qualifies(cfg, mask)) local.offer(cfg.n, mask);
            locals[omp_get_thread_num()] = local;
        }
#else
        locals.resize(1);
        for (std::uint64_t mask = 1; mask <= total; ++mask)
            if (mask_qualifies(cfg, mask)) locals[0].offer(cfg.n, mask);
#endif
        for (const Best& b : locals) best.merge(b);
    } else {
        for (std::uint64_t mask = 1; mask <= total; ++mask)
            if (mask_qualifies(cfg, mask)) best.offer(cfg.n, mask);
    }
    out.subsets_examined = total;
    if (best.size == ~std::uint64_t{0}) {
        out.status = SearchStatus::infeasible;
    } else {
        out.status = SearchStatus::found;
        out.size = best.size;
        out.witness_mask = best.canon;
    }
    return out;
}

// Number of (coordinate, bit) half-cubes not yet met by the set.
int missing_halves(int n, std::uint64_t mask) {
    unsigned all = (1u << n) - 1;
    unsigned seen0 = 0, seen1 = 0;
    std::uint64_t bits = mask;
    while (bits) {
        unsigned v = static_cast<unsigned>(__builtin_ctzll(bits));
        bits &= bits - 1;
        seen1 |= v;
        seen0 |= ~v & all;
    }
    return __builtin_popcount(~seen0 & all) + __builtin_popcount(~seen1 & all);
}

// Margin prune: with `slack` vertices still to add, can a superset of
// `mask` of the target size satisfy the constraints?  Each added vertex
// raises any fixed vertex's degree by at most one and covers at most n
// missing half-cubes.
bool partial_viable(const SearchConfig& cfg, std::uint64_t mask, int slack) {
    std::uint64_t bits = mask;
    while (bits) {
        int v = __builtin_ctzll(bits);
        bits &= bits - 1;
        if (kernels::degree(cfg.n, mask, v) + slack < cfg.d) return false;
    }
    if (cfg.require_irreducible &&
        missing_halves(cfg.n, mask) > slack * cfg.n)
        return false;
    return true;
}

std::vector<std::uint64_t> expand_level(const SearchConfig& cfg,
                                        const std::vector<std::uint64_t>& reps,
                                        int slack) {
    int vertices = 1 << cfg.n;
    std::vector<std::uint64_t> children;
#ifdef _OPENMP
#pragma omp parallel if (cfg.parallel && reps.size() > 32)
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 16) nowait
        for (long long r = 0; r < static_cast<long long>(reps.size()); ++r) {
            for (int v = 0; v < vertices; ++v) {
                std::uint64_t bit = std::uint64_t{1} << v;
                if (reps[r] & bit) continue;
                std::uint64_t child = reps[r] | bit;
                if (!partial_viable(cfg, child, slack)) continue;
                local.push_back(canonical_mask(cfg.n, child));
            }
        }
#pragma omp critical
        children.insert(children.end(), local.begin(), local.end());
    }
#else
    for (std::uint64_t rep : reps) {
        for (int v = 0; v < vertices; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if (rep & bit) continue;
            std::uint64_t child = rep | bit;
            if (!partial_viable(cfg, child, slack)) continue;
            children.push_back(canonical_mask(cfg.n, child));
        }
    }
#endif
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());
    return children;
}

SearchOutcome bnb_search(const SearchConfig& cfg) {
    SearchOutcome out;
    aut_vertex_maps(cfg.n);
    int vertices = 1 << cfg.n;
    int k0 = std::min(1 << cfg.d, vertices);  // Simon lower bound seed
    std::uint64_t examined = 0;

    for (int k = k0; k <= vertices; ++k) {
        // orbit representatives of size j, grown to target size k
        std::vector<std::uint64_t> level{std::uint64_t{1}};
        ++examined;
        if (!partial_viable(cfg, level[0], k - 1)) level.clear();
        for (int j = 1; j < k && !level.empty(); ++j) {
            level = expand_level(cfg, level, k - j - 1);
            examined += level.size();
            if (cfg.size_budget && examined > *cfg.size_budget) {
                out.status = SearchStatus::budget_exceeded;
                out.subsets_examined = examined;
                return out;
            }
        }
        Best best;
        for (std::uint64_t rep : level)
            if (mask_qualifies(cfg, rep)) best.merge(Best{
                static_cast<std::uint64_t>(__builtin_popcountll(rep)), rep});
        if (best.size != ~std::uint64_t{0}) {
            out.status = SearchStatus::found;
            out.size = best.size;
            out.witness_mask = best.canon;
            out.subsets_examined = examined;
            return out;
        }
    }
    out.status = SearchStatus::infeasible;
    out.subsets_examined = examined;
    return out;
}

}  // namespace

bool mask_qualifies(const SearchConfig& cfg, std::uint64_t mask) {
    if (!mask) return false;
    int delta = kernels::min_degree(cfg.n, mask);
    if (cfg.degree_mode == DegreeMode::exact ? delta != cfg.d : delta < cfg.d)
        return false;
    return !cfg.require_irreducible || kernels::irreducible(cfg.n, mask);
}

SearchOutcome min_size_search(const SearchConfig& cfg) {
    check_config(cfg);
    return cfg.strategy == Strategy::exhaustive ? exhaustive_search(cfg)
                                                : bnb_search(cfg);
}

}  // namespace cubesense
