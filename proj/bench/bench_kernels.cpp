// Wall-clock comparison of the OpenMP kernels against their serial reference
// paths. Both paths run the same fixed-chunk plan, so results are identical
// bit for bit; the benchmark asserts that before timing.
#include <chrono>
#include <cstdio>
#include <cstring>

#include "modphi/erdosrenyi.hpp"
#include "modphi/models.hpp"
#include "modphi/multidim.hpp"
#include "modphi/parallel.hpp"

using namespace modphi;

namespace {

template <class F>
double time_s(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-28s serial %7.3fs   openmp %7.3fs   speedup %.2fx   identical: %s\n", name,
                serial, parallel, serial / parallel, identical ? "yes" : "NO");
}

} // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    std::printf("threads available: %d\n", hardware_threads());

    {
        std::int64_t trials = quick ? 100000 : 400000;
        WalkHistogram hs, hp;
        double ts = time_s([&] { hs = walk2d_conditional_mc(400, 0.45, trials, 1, 36, false); });
        double tp = time_s([&] { hp = walk2d_conditional_mc(400, 0.45, trials, 1, 36, true); });
        report("walk2d rejection sampler", ts, tp,
               hs.counts == hp.counts && hs.accepted == hp.accepted);
    }
    {
        std::int64_t trials = quick ? 4000 : 20000;
        McTail s, p;
        double threshold = std::pow(150.0, 3) * 0.125 + 150.0 * 150.0 * (1.285 - 0.375);
        double ts = time_s([&] { s = mc_triangle_tail(150, 0.5, threshold, trials, 2, false); });
        double tp = time_s([&] { p = mc_triangle_tail(150, 0.5, threshold, trials, 2, true); });
        report("triangle count sampler", ts, tp, s.hits == p.hits);
    }
    {
        std::vector<std::uint64_t> cp = {quick ? 2000000ull : 10000000ull};
        std::vector<OmegaStatistics> s, p;
        double ts = time_s([&] { s = omega_statistics(cp, false); });
        double tp = time_s([&] { p = omega_statistics(cp, true); });
        report("omega additive sieve", ts, tp, s[0].histogram == p[0].histogram);
    }
    {
        std::int64_t trials = quick ? 2000 : 10000;
        McCumulants s, p;
        double ts = time_s([&] { s = mc_cumulants(40, pattern_triangle(), 0.4, trials, 3, false); });
        double tp = time_s([&] { p = mc_cumulants(40, pattern_triangle(), 0.4, trials, 3, true); });
        report("subgraph cumulant sampler", ts, tp, s.kappa2 == p.kappa2 && s.kappa3 == p.kappa3);
    }
    return 0;
}
