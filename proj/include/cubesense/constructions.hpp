#pragma once

// Closed-form size formulas for extremal low-sensitivity sets and the
// explicit constructions witnessing their tightness.

#include <cstdint>

#include "cubesense/core.hpp"

namespace cubesense {

// num / 2^log2_den, always in lowest terms.
struct Dyadic {
    std::uint64_t num = 0;
    int log2_den = 0;

    bool operator==(const Dyadic&) const = default;
};

// Minimum size of a nonempty set with minimum degree exactly d: 2^d.
std::uint64_t simon_min_size(int n, int d);

// (n,d) pairs for which an irreducible set with delta = d exists.
bool irreducible_feasible(int n, int d);

// S(n,d) = ceil(2^{d+1} - 2^{2d-n}): the minimum size of an irreducible
// set with minimum degree exactly d.  Errors on infeasible (n,d).
std::uint64_t min_irreducible_size(int n, int d);

// The gap lower edge for non-subcube sets: 3 * 2^{d-1} (exact dyadic 3/2
// at d = 0).
Dyadic gap_threshold(int d);

// The d-subcube fixing x_1..x_{n-d} to 0.
VertexSet simon_extremal(int n, int d);

// An irreducible set with delta exactly d and size S(n,d): two disjoint
// d-subcubes when 2d < n, two overlapping non-adjacent d-subcubes when
// 2d >= n.  Postconditions (delta, irreducibility, size) are checked on
// every return.
VertexSet extremal_irreducible(int n, int d);

}  // namespace cubesense
