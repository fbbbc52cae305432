#include "cubesense/kernels.hpp"

namespace cubesense::kernels {

VertexSet to_set(int n, std::uint64_t mask) {
    check_mask_dim(n);
    VertexSet s(n);
    std::uint64_t bits = mask & universe_mask(n);
    while (bits) {
        s.insert(static_cast<Vertex>(__builtin_ctzll(bits)));
        bits &= bits - 1;
    }
    return s;
}

std::uint64_t to_mask(const VertexSet& s) {
    check_mask_dim(s.dim());
    std::uint64_t mask = 0;
    s.for_each([&](Vertex v) { mask |= std::uint64_t{1} << v; });
    return mask;
}

}  // namespace cubesense::kernels
