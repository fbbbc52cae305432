#pragma once

// Sensitivity measures of Boolean functions given as truth tables, and the
// corollaries bridging functions to vertex sets.

#include <cstdint>
#include <optional>
#include <vector>

#include "cubesense/core.hpp"

namespace cubesense {

// f : {0,1}^n -> {0,1}, output bit at vertex index v = f(x).
class TruthTable {
  public:
    explicit TruthTable(int n);
    static TruthTable constant(int n, bool value);

    int dim() const { return n_; }
    std::uint64_t table_size() const { return std::uint64_t{1} << n_; }

    bool value(Vertex v) const {
        return (words_[v >> 6] >> (v & 63)) & 1;
    }
    void set(Vertex v, bool b);

    bool operator==(const TruthTable&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    int n_;
    std::vector<std::uint64_t> words_;
};

// s(f,x): number of coordinates whose flip changes f at x.
int local_sensitivity(const TruthTable& f, Vertex x);

// s(f) = max over x of s(f,x).
int sensitivity(const TruthTable& f);

// s_c(f); absent when no input has f(x) = c.
std::optional<int> c_sensitivity(const TruthTable& f, int c);

// V(f) = {x : f(x) = 1}.
VertexSet one_set(const TruthTable& f);
TruthTable from_set(const VertexSet& s);
TruthTable negate(const TruthTable& f);

struct MeasureReport {
    int s = 0;
    std::optional<int> s0;
    std::optional<int> s1;
    std::uint64_t ones_count = 0;
    std::optional<int> delta_of_one_set;
};

MeasureReport measure(const TruthTable& f);

// |V(f)| >= 2^{n - s_1(f)}, equality iff V(f) is a subcube.
struct SimonCorollaryVerdict {
    int s1 = 0;
    std::uint64_t bound = 0;
    std::uint64_t actual = 0;
    bool equality = false;
    bool is_subcube = false;
    bool holds = false;
};

SimonCorollaryVerdict check_simon_corollary(const TruthTable& f);  // errors on constant 0

// |V(f)| >= 2^{n-s_1+1} - 2^{n-2s_1} when every half-cube meets V(f).
// The right side can be fractional; it is compared exactly as
// 2^{2s_1} |V| >= 2^{n+s_1+1} - 2^n.
struct IrreducibleCorollaryVerdict {
    bool condition_met = false;
    int s1 = 0;
    std::uint64_t actual = 0;
    std::uint64_t bound_num = 0;  // bound = bound_num / 2^bound_log2_den
    int bound_log2_den = 0;
    bool holds = false;
};

IrreducibleCorollaryVerdict check_irreducible_corollary(const TruthTable& f);

}  // namespace cubesense
