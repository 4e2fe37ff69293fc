// Throughput comparison: the straightforward per-candidate reference scan
// against the cached-power kernel, single- and multi-threaded.
#include "ssp/enumerate.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ssp;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_instance(unsigned g, u64 p, unsigned free_high) {
    auto F = FieldCtx::make(p, 1);
    auto SF = SmallField::build(F);

    // reference scan only where per-candidate generic arithmetic is viable
    u64 family = 3;
    for (unsigned i = 0; i < 2 * g; ++i) family *= p;
    if (family <= 100000) {
        auto t0 = std::chrono::steady_clock::now();
        auto ref = enumerate_superspecial_reference(g, F);
        double dt = seconds_since(t0);
        std::printf("g=%u p=%2llu reference   %10llu cand  %7.3fs  %7.3f Mcand/s  hits=%zu\n", g,
                    (unsigned long long)p, (unsigned long long)family, dt, family / dt / 1e6,
                    ref.size());
        std::fflush(stdout);
    }

    for (unsigned nthreads : {1u, 0u}) {
        std::map<unsigned, u16> fixed{{2 * g, 1}};
        for (unsigned s = free_high; s < 2 * g; ++s) fixed[s] = 1;
        std::vector<unsigned> free_slots;
        for (unsigned s = 0; s < free_high; ++s) free_slots.push_back(s);
        u64 scanned = 0;
        auto t0 = std::chrono::steady_clock::now();
        auto hits = exhaustive_scan(SF, g, fixed, free_slots, nthreads, &scanned, nullptr);
        double dt = seconds_since(t0);
        unsigned reported = nthreads;
#ifdef _OPENMP
        if (reported == 0) reported = static_cast<unsigned>(omp_get_max_threads());
#else
        if (reported == 0) reported = 1;
#endif
        std::printf("g=%u p=%2llu kernel T=%u  %10llu cand  %7.3fs  %7.3f Mcand/s  hits=%zu\n", g,
                    (unsigned long long)p, reported, (unsigned long long)scanned, dt,
                    scanned / dt / 1e6, hits.size());
        std::fflush(stdout);
    }
}

} // namespace

int main() {
    bench_instance(2, 7, 4);   // whole genus-2 family, reference vs kernel
    bench_instance(2, 13, 4);  // kernel slice: one b value, 13^4 candidates
    bench_instance(4, 11, 6);  // genus-4 slice: 11^6 candidates
    bench_instance(4, 13, 6);  // genus-4 slice: 13^6 candidates
    return 0;
}
