#pragma once

// Minimum-size search over subsets of Q_n under degree and irreducibility
// constraints: exhaustive enumeration (n <= 4) and an isomorph-free
// branch-and-bound growing canonical orbit representatives by size.

#include <cstdint>
#include <optional>

#include "cubesense/core.hpp"

namespace cubesense {

enum class DegreeMode { exact, at_least };
enum class Strategy { exhaustive, canonical_bnb };

struct SearchConfig {
    int n = 0;
    int d = 0;
    DegreeMode degree_mode = DegreeMode::exact;
    bool require_irreducible = false;
    std::optional<std::uint64_t> size_budget;  // cap on subsets examined
    Strategy strategy = Strategy::exhaustive;
    bool parallel = true;
};

enum class SearchStatus { found, infeasible, budget_exceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::infeasible;
    std::uint64_t size = 0;           // valid when status == found
    std::uint64_t witness_mask = 0;   // canonical bitmap of one minimum witness
    std::uint64_t subsets_examined = 0;
};

// Minimum |S| over nonempty S meeting the constraints, plus one witness
// (smallest canonical bitmap).  The exhaustive strategy requires n <= 4;
// canonical_bnb requires n <= 6.
SearchOutcome min_size_search(const SearchConfig& cfg);

bool mask_qualifies(const SearchConfig& cfg, std::uint64_t mask);

}  // namespace cubesense
