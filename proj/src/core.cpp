#include "cubesense/core.hpp"

#include <bit>

namespace cubesense {

std::string vertex_string(int n, Vertex v) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((v >> i) & 1) s[i] = '1';
    return s;
}

VertexSet::VertexSet(int n) : n_(n) {
    check_dim(n);
    words_.assign(((std::uint64_t{1} << n) + 63) >> 6, 0);
}

VertexSet VertexSet::full(int n) {
    VertexSet s(n);
    std::uint64_t total = s.universe_size();
    for (std::size_t w = 0; w < s.words_.size(); ++w) {
        std::uint64_t remaining = total - (std::uint64_t(w) << 6);
        s.words_[w] = remaining >= 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << remaining) - 1;
    }
    return s;
}

VertexSet VertexSet::of(int n, std::initializer_list<Vertex> vs) {
    VertexSet s(n);
    for (Vertex v : vs) s.insert(v);
    return s;
}

void VertexSet::insert(Vertex v) {
    check_vertex(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    check_vertex(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::uint64_t VertexSet::size() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

std::vector<Vertex> VertexSet::vertices() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

int degree(const VertexSet& S, Vertex v) {
    if (!S.contains(v))
        throw std::invalid_argument("degree: vertex not in set");
    int n = S.dim(), deg = 0;
    for (int i = 0; i < n; ++i)
        if (S.contains(v ^ (Vertex{1} << i))) ++deg;
    return deg;
}

int min_degree(const VertexSet& S) {
    if (S.empty())
        throw std::domain_error("delta undefined on empty graph");
    int best = S.dim();
    S.for_each([&](Vertex v) {
        int d = degree(S, v);
        if (d < best) best = d;
    });
    return best;
}

int set_sensitivity(const VertexSet& S) {
    return S.dim() - min_degree(S);
}

bool is_irreducible(const VertexSet& S) {
    if (S.empty()) return false;
    int n = S.dim();
    std::uint32_t seen0 = 0, seen1 = 0;
    std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    S.for_each([&](Vertex v) {
        seen1 |= v;
        seen0 |= ~v & all;
    });
    return seen0 == all && seen1 == all;
}

Subcube make_subcube(int n, std::uint32_t fixed_mask, std::uint32_t fixed_values) {
    check_dim(n);
    std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    if (fixed_mask & ~all)
        throw std::invalid_argument("subcube fixed_mask exceeds dimension");
    if (fixed_values & ~fixed_mask)
        throw std::invalid_argument("subcube fixed_values outside fixed_mask");
    return Subcube{n, fixed_mask, fixed_values};
}

std::optional<Subcube> as_subcube(const VertexSet& S) {
    if (S.empty()) return std::nullopt;
    std::uint64_t sz = S.size();
    if (sz & (sz - 1)) return std::nullopt;  // not a power of two
    int n = S.dim();
    std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    std::uint32_t and_all = all, or_all = 0;
    S.for_each([&](Vertex v) {
        and_all &= v;
        or_all |= v;
    });
    // coordinates where all members agree
    std::uint32_t agree = ~(and_all ^ or_all) & all;
    int m = n - __builtin_popcount(agree);
    if (sz != (std::uint64_t{1} << m)) return std::nullopt;
    return Subcube{n, agree, and_all & agree};
}

VertexSet subcube_vertices(const Subcube& c) {
    Subcube chk = make_subcube(c.n, c.fixed_mask, c.fixed_values);
    (void)chk;
    VertexSet out(c.n);
    std::uint32_t free_mask = ~c.fixed_mask & ((c.n == 32) ? ~0u : ((1u << c.n) - 1));
    // iterate submasks of free_mask
    std::uint32_t sub = 0;
    while (true) {
        out.insert(sub | c.fixed_values);
        if (sub == free_mask) break;
        sub = (sub - free_mask) & free_mask;
    }
    return out;
}

bool are_adjacent(const Subcube& a, const Subcube& b) {
    if (a.n != b.n)
        throw std::invalid_argument("are_adjacent: dimension mismatch");
    return a.fixed_mask == b.fixed_mask &&
           __builtin_popcount(a.fixed_values ^ b.fixed_values) == 1;
}

VertexSet half_restrict(const VertexSet& S, int i, int b) {
    int n = S.dim();
    check_coord(n, i);
    if (n < 2)
        throw std::invalid_argument("half_restrict: resulting dimension would be 0");
    if (b != 0 && b != 1)
        throw std::invalid_argument("half_restrict: bit must be 0 or 1");
    VertexSet out(n - 1);
    std::uint32_t low = (std::uint32_t{1} << (i - 1)) - 1;
    S.for_each([&](Vertex v) {
        if (((v >> (i - 1)) & 1) == static_cast<std::uint32_t>(b))
            out.insert((v & low) | ((v >> 1) & ~low));
    });
    return out;
}

namespace {
void check_same_dim(const VertexSet& a, const VertexSet& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("set algebra: dimension mismatch");
}
}  // namespace

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    check_same_dim(a, b);
    VertexSet out = a;
    for (std::size_t w = 0; w < out.words().size(); ++w)
        out.words()[w] |= b.words()[w];
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    check_same_dim(a, b);
    VertexSet out = a;
    for (std::size_t w = 0; w < out.words().size(); ++w)
        out.words()[w] &= b.words()[w];
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    check_same_dim(a, b);
    VertexSet out = a;
    for (std::size_t w = 0; w < out.words().size(); ++w)
        out.words()[w] &= ~b.words()[w];
    return out;
}

}  // namespace cubesense
