#include "cubesense/measures.hpp"

#include <bit>

namespace cubesense {

TruthTable::TruthTable(int n) : n_(n) {
    check_dim(n);
    words_.assign(((std::uint64_t{1} << n) + 63) >> 6, 0);
}

TruthTable TruthTable::constant(int n, bool value) {
    TruthTable t(n);
    if (value) {
        std::uint64_t total = t.table_size();
        for (std::size_t w = 0; w < t.words_.size(); ++w) {
            std::uint64_t remaining = total - (std::uint64_t(w) << 6);
            t.words_[w] = remaining >= 64 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << remaining) - 1;
        }
    }
    return t;
}

void TruthTable::set(Vertex v, bool b) {
    if (v >= table_size())
        throw std::invalid_argument("truth table index out of range");
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (b)
        words_[v >> 6] |= bit;
    else
        words_[v >> 6] &= ~bit;
}

int local_sensitivity(const TruthTable& f, Vertex x) {
    if (x >= f.table_size())
        throw std::invalid_argument("vertex out of range");
    int n = f.dim(), s = 0;
    bool fx = f.value(x);
    for (int i = 0; i < n; ++i)
        if (f.value(x ^ (Vertex{1} << i)) != fx) ++s;
    return s;
}

int sensitivity(const TruthTable& f) {
    int best = 0;
    for (Vertex x = 0; x < f.table_size(); ++x)
        best = std::max(best, local_sensitivity(f, x));
    return best;
}

std::optional<int> c_sensitivity(const TruthTable& f, int c) {
    std::optional<int> best;
    for (Vertex x = 0; x < f.table_size(); ++x) {
        if (f.value(x) != static_cast<bool>(c)) continue;
        int s = local_sensitivity(f, x);
        if (!best || s > *best) best = s;
    }
    return best;
}

VertexSet one_set(const TruthTable& f) {
    VertexSet s(f.dim());
    for (Vertex x = 0; x < f.table_size(); ++x)
        if (f.value(x)) s.insert(x);
    return s;
}

TruthTable from_set(const VertexSet& s) {
    TruthTable t(s.dim());
    s.for_each([&](Vertex v) { t.set(v, true); });
    return t;
}

TruthTable negate(const TruthTable& f) {
    TruthTable t(f.dim());
    for (Vertex x = 0; x < f.table_size(); ++x)
        t.set(x, !f.value(x));
    return t;
}

MeasureReport measure(const TruthTable& f) {
    MeasureReport r;
    r.s0 = c_sensitivity(f, 0);
    r.s1 = c_sensitivity(f, 1);
    r.s = std::max(r.s0.value_or(0), r.s1.value_or(0));
    VertexSet ones = one_set(f);
    r.ones_count = ones.size();
    if (!ones.empty()) r.delta_of_one_set = min_degree(ones);
    return r;
}

SimonCorollaryVerdict check_simon_corollary(const TruthTable& f) {
    VertexSet ones = one_set(f);
    if (ones.empty())
        throw std::invalid_argument(
            "check_simon_corollary requires f not constant 0");
    SimonCorollaryVerdict v;
    v.s1 = set_sensitivity(ones);
    v.bound = std::uint64_t{1} << (f.dim() - v.s1);
    v.actual = ones.size();
    v.equality = v.actual == v.bound;
    v.is_subcube = as_subcube(ones).has_value();
    v.holds = v.actual >= v.bound && v.equality == v.is_subcube;
    return v;
}

IrreducibleCorollaryVerdict check_irreducible_corollary(const TruthTable& f) {
    IrreducibleCorollaryVerdict v;
    VertexSet ones = one_set(f);
    v.condition_met = is_irreducible(ones);
    if (!v.condition_met) return v;
    int n = f.dim();
    v.s1 = set_sensitivity(ones);
    v.actual = ones.size();
    // bound = 2^{n-s1+1} - 2^{n-2s1} = (2^{n+s1+1} - 2^n) / 2^{2s1}
    std::uint64_t num = (std::uint64_t{1} << (n + v.s1 + 1)) - (std::uint64_t{1} << n);
    int den = 2 * v.s1;
    int shift = std::min(den, std::countr_zero(num));
    v.bound_num = num >> shift;
    v.bound_log2_den = den - shift;
    // exact comparison: 2^{2s1} |V| >= 2^{n+s1+1} - 2^n
    unsigned __int128 lhs = static_cast<unsigned __int128>(v.actual) << den;
    unsigned __int128 rhs = num;
    v.holds = lhs >= rhs;
    return v;
}

}  // namespace cubesense
