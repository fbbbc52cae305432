#pragma once

// Independent brute-force oracles used to freeze expected values.  These
// deliberately avoid the bitmap kernels: sets are std::set<unsigned> and
// every quantity is computed by plain enumeration.

#include <optional>
#include <random>
#include <set>

#include "cubesense/core.hpp"

namespace oracle {

using VSet = std::set<unsigned>;

inline int degree(int n, const VSet& s, unsigned v) {
    int deg = 0;
    for (int i = 0; i < n; ++i)
        if (s.count(v ^ (1u << i))) ++deg;
    return deg;
}

inline int min_degree(int n, const VSet& s) {
    int best = n;
    for (unsigned v : s) best = std::min(best, degree(n, s, v));
    return best;
}

inline bool irreducible(int n, const VSet& s) {
    if (s.empty()) return false;
    for (int i = 0; i < n; ++i)
        for (unsigned b = 0; b <= 1; ++b) {
            bool met = false;
            for (unsigned v : s)
                if (((v >> i) & 1) == b) met = true;
            if (!met) return false;
        }
    return true;
}

// Minimum size over all nonempty subsets of Q_n meeting the constraints;
// nullopt when none qualifies.  Only sensible for n <= 4.
inline std::optional<unsigned> min_size(int n, int d, bool exact,
                                        bool require_irreducible) {
    unsigned vertices = 1u << n;
    std::optional<unsigned> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << vertices); ++mask) {
        VSet s;
        for (unsigned v = 0; v < vertices; ++v)
            if ((mask >> v) & 1) s.insert(v);
        int delta = min_degree(n, s);
        if (exact ? delta != d : delta < d) continue;
        if (require_irreducible && !irreducible(n, s)) continue;
        unsigned sz = static_cast<unsigned>(s.size());
        if (!best || sz < *best) best = sz;
    }
    return best;
}

inline cubesense::VertexSet to_vertex_set(int n, const VSet& s) {
    cubesense::VertexSet out(n);
    for (unsigned v : s) out.insert(v);
    return out;
}

inline VSet random_set(int n, std::mt19937_64& rng, double density = 0.5) {
    VSet s;
    std::bernoulli_distribution coin(density);
    for (unsigned v = 0; v < (1u << n); ++v)
        if (coin(rng)) s.insert(v);
    return s;
}

}  // namespace oracle
