#include "cubesense/constructions.hpp"

#include <stdexcept>
#include <string>

namespace cubesense {

namespace {

void check_simon_params(int n, int d) {
    check_dim(n);
    if (d < 0 || d > n)
        throw std::invalid_argument("d must be in [0, n], got d=" +
                                    std::to_string(d));
}

}  // namespace

std::uint64_t simon_min_size(int n, int d) {
    check_simon_params(n, d);
    return std::uint64_t{1} << d;
}

bool irreducible_feasible(int n, int d) {
    return n >= 1 && n <= kMaxN && d >= 0 && d <= n && !(n == 1 && d == 0);
}

std::uint64_t min_irreducible_size(int n, int d) {
    check_dim(n);
    if (!irreducible_feasible(n, d))
        throw std::invalid_argument(
            "no irreducible set with delta = " + std::to_string(d) +
            " exists in Q_" + std::to_string(n));
    if (2 * d >= n)
        return (std::uint64_t{1} << (d + 1)) - (std::uint64_t{1} << (2 * d - n));
    return std::uint64_t{1} << (d + 1);  // ceil of 2^{d+1} minus a value in (0,1)
}

Dyadic gap_threshold(int d) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (d == 0) return Dyadic{3, 1};
    return Dyadic{std::uint64_t{3} << (d - 1), 0};
}

VertexSet simon_extremal(int n, int d) {
    check_simon_params(n, d);
    return subcube_vertices(
        make_subcube(n, (n - d == 32) ? ~0u : ((1u << (n - d)) - 1), 0));
}

namespace {

// {x : x_i = 1 for all i in [lo+1, hi]}, coordinates 0-based [lo, hi).
VertexSet ones_window(int n, int lo, int hi) {
    std::uint32_t mask = 0;
    for (int i = lo; i < hi; ++i) mask |= 1u << i;
    return subcube_vertices(make_subcube(n, mask, mask));
}

}  // namespace

VertexSet extremal_irreducible(int n, int d) {
    if (!irreducible_feasible(n, d))
        throw std::invalid_argument(
            "infeasible (n,d)=(" + std::to_string(n) + "," + std::to_string(d) +
            "): no irreducible set with this minimum degree exists");
    VertexSet result(n);
    if (d == n) {
        result = VertexSet::full(n);
    } else if (2 * d < n) {
        // two d-subcubes fixing the first n-d coordinates to all-0 / all-1
        std::uint32_t mask = (1u << (n - d)) - 1;
        result = set_union(subcube_vertices(make_subcube(n, mask, 0)),
                           subcube_vertices(make_subcube(n, mask, mask)));
    } else {
        // two overlapping windows of n-d coordinates fixed to 1
        result = set_union(ones_window(n, 0, n - d),
                           ones_window(n, n - d, 2 * (n - d)));
    }
    if (min_degree(result) != d)
        throw std::logic_error("extremal_irreducible: minimum degree mismatch");
    if (!is_irreducible(result))
        throw std::logic_error("extremal_irreducible: set is not irreducible");
    if (result.size() != min_irreducible_size(n, d))
        throw std::logic_error("extremal_irreducible: size formula mismatch");
    return result;
}

}  // namespace cubesense
