// Serial vs OpenMP breakpoint scan on a long synthetic entropy series.
//
//   bench_breakpoint [n_points] [repeats]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "infl/hyperinflation.hpp"
#include "infl/kernels/breakpoint_scan.hpp"

namespace {

template <class F>
double best_seconds(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 4000;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

    // slow rates keep the double exponential inside the double range
    const infl::HyperinflationParams p{0.001, 1.0, 0.6 * n, 2.0 / n};
    infl::EntropySeries series;
    for (int t = 0; t < n; ++t) {
        series.t.push_back(t);
        series.v.push_back(infl::info_entropy_value(t, p) * (1.0 + 1e-3 * std::sin(0.37 * t)));
    }
    const auto candidates = infl::feasible_breakpoints(series, infl::full_search_range(series));

    std::vector<double> serial, parallel;
    const double ts = best_seconds(repeats, [&] { serial = infl::kernels::scan_breakpoints_serial(series, candidates); });
    const double tp =
        best_seconds(repeats, [&] { parallel = infl::kernels::scan_breakpoints_parallel(series, candidates); });

    const bool identical = serial == parallel;
    const auto best = infl::kernels::argmin_first(serial);
    std::printf("points=%d candidates=%zu threads=%d\n", n, candidates.size(), omp_get_max_threads());
    std::printf("serial   %.4f s\n", ts);
    std::printf("parallel %.4f s  (speedup %.2fx)\n", tp, ts / tp);
    std::printf("t_star=%lld identical=%s\n", static_cast<long long>(candidates[best]), identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
