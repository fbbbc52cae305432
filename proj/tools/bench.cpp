// Benchmark comparing the serial reference scans against the OpenMP
// parallel path, and checking that both produce identical certificates.

#include <chrono>
#include <iostream>

#include "cubesense/io.hpp"
#include "cubesense/search.hpp"
#include "cubesense/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace cubesense;
using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f) {
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_claim(const char* name, Certificate (*fn)(int, const VerifyOptions&),
                 int n) {
    VerifyOptions serial, parallel;
    serial.parallel = false;
    Certificate cs, cp;
    double ts = time_ms([&] { cs = fn(n, serial); });
    double tp = time_ms([&] { cp = fn(n, parallel); });
    bool identical = certificate_json(cs, false) == certificate_json(cp, false);
    std::cout << name << " n=" << n << ": serial " << ts << " ms, omp " << tp
              << " ms, speedup " << (tp > 0 ? ts / tp : 0.0)
              << (identical ? "" : "  [MISMATCH]") << "\n";
}

void bench_search(int n, int d, bool irreducible) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.d = d;
    cfg.require_irreducible = irreducible;
    cfg.strategy = Strategy::exhaustive;
    cfg.parallel = false;
    SearchOutcome serial{}, parallel{};
    double ts = time_ms([&] { serial = min_size_search(cfg); });
    cfg.parallel = true;
    double tp = time_ms([&] { parallel = min_size_search(cfg); });
    bool identical = serial.status == parallel.status &&
                     serial.size == parallel.size &&
                     serial.witness_mask == parallel.witness_mask;
    std::cout << "search n=" << n << " d=" << d
              << (irreducible ? " irreducible" : "") << ": serial " << ts
              << " ms, omp " << tp << " ms, speedup "
              << (tp > 0 ? ts / tp : 0.0) << (identical ? "" : "  [MISMATCH]")
              << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both paths serial\n";
#endif
    bench_claim("verify simon", verify_simon, 4);
    bench_claim("verify gap", verify_gap, 4);
    bench_claim("verify lemma-minsize", verify_lemma_minsize, 4);
    bench_claim("verify lemma-extended", verify_lemma_extended, 4);
    bench_claim("verify lemma-fancy", verify_lemma_fancy, 4);
    bench_claim("verify main", verify_main, 4);
    bench_search(4, 2, true);
    bench_search(4, 3, false);
    return 0;
}
