#pragma once

// Core data types and exact kernels for induced subgraphs of the Boolean
// cube Q_n.  Vertices are integers in [0, 2^n); coordinate i (1-based) is
// stored at bit i-1, so x_1 is the least significant bit.  String rendering
// is x_1 x_2 ... x_n left to right.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubesense {

inline constexpr int kMaxN = 25;  // 2^25-bit membership bitmaps = 4 MiB

using Vertex = std::uint32_t;

inline void check_dim(int n) {
    if (n < 1 || n > kMaxN)
        throw std::invalid_argument("dimension must be in [1, " +
                                    std::to_string(kMaxN) + "], got " +
                                    std::to_string(n));
}

inline void check_coord(int n, int i) {
    if (i < 1 || i > n)
        throw std::invalid_argument("coordinate " + std::to_string(i) +
                                    " out of range [1, " + std::to_string(n) + "]");
}

// x^{(i)}: flip the i-th variable (1-based).
inline Vertex flip(int n, Vertex v, int i) {
    check_coord(n, i);
    return v ^ (Vertex{1} << (i - 1));
}

// Binary string x_1 x_2 ... x_n.
std::string vertex_string(int n, Vertex v);

// A subset of {0,1}^n as a dense membership bitmap over 2^n vertices.
class VertexSet {
  public:
    explicit VertexSet(int n);
    static VertexSet full(int n);
    static VertexSet of(int n, std::initializer_list<Vertex> vs);

    int dim() const { return n_; }
    std::uint64_t universe_size() const { return std::uint64_t{1} << n_; }

    bool contains(Vertex v) const {
        return (words_[v >> 6] >> (v & 63)) & 1;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    std::uint64_t size() const;
    bool empty() const;

    bool operator==(const VertexSet&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<Vertex>((w << 6) + __builtin_ctzll(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Vertex> vertices() const;

  private:
    int n_;
    std::vector<std::uint64_t> words_;

    void check_vertex(Vertex v) const {
        if (v >= universe_size())
            throw std::invalid_argument("vertex index out of range");
    }
};

// deg(v, G): number of coordinates i with flip(v,i) in S.  v must be in S.
int degree(const VertexSet& S, Vertex v);

// delta(G).  Errors on the empty set.
int min_degree(const VertexSet& S);

// n - delta(G) = max over x in S of |{i : x^{(i)} not in S}|.
int set_sensitivity(const VertexSet& S);

// True iff S meets both halves {x_i = 0} and {x_i = 1} of every coordinate.
bool is_irreducible(const VertexSet& S);

// A subcube given by fixed positions and their bit values.
struct Subcube {
    int n = 0;
    std::uint32_t fixed_mask = 0;
    std::uint32_t fixed_values = 0;

    int dimension() const { return n - __builtin_popcount(fixed_mask); }
    bool operator==(const Subcube&) const = default;
};

Subcube make_subcube(int n, std::uint32_t fixed_mask, std::uint32_t fixed_values);

// The unique subcube whose vertex set equals S, when one exists.
// S of size 2^m is a subcube iff the coordinates where all members agree
// number exactly n-m.
std::optional<Subcube> as_subcube(const VertexSet& S);

VertexSet subcube_vertices(const Subcube& c);

// Same fixed positions, fixed values differing in exactly one position.
bool are_adjacent(const Subcube& a, const Subcube& b);

// Projection of S ∩ {x : x_i = b} onto the remaining n-1 coordinates,
// preserving their relative order.
VertexSet half_restrict(const VertexSet& S, int i, int b);

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

}  // namespace cubesense
