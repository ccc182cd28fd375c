#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "infl/hyperinflation.hpp"
#include "infl/kernels/breakpoint_scan.hpp"
#include "infl/synth.hpp"

using namespace infl;

TEST_CASE("parallel scan matches the serial reference bit for bit") {
    const HyperinflationParams p{0.1001, std::log(10.0), 23.0, 0.112};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = entropy_series(
            synth::generate_double_exponential_series(p, 42, {synth::NoiseKind::gaussian, 0.05, seed}));
        const auto candidates = feasible_breakpoints(s, full_search_range(s));
        const auto serial = kernels::scan_breakpoints_serial(s, candidates);
        const auto parallel = kernels::scan_breakpoints_parallel(s, candidates);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i] == fit_hyperinflation(s, static_cast<double>(candidates[i])).sse_total);
        }
    }
}

TEST_CASE("infeasible candidates score +inf") {
    const HyperinflationParams p{0.1001, std::log(10.0), 23.0, 0.112};
    const auto s = entropy_series(synth::generate_double_exponential_series(p, 42));
    const std::vector<std::int64_t> candidates{1, 23, 41};
    const auto sse = kernels::scan_breakpoints_serial(s, candidates);
    CHECK(std::isinf(sse[0]));
    CHECK(std::isfinite(sse[1]));
    CHECK(std::isinf(sse[2]));
}

TEST_CASE("argmin_first breaks ties toward the first index") {
    const double inf = std::numeric_limits<double>::infinity();
    const std::vector<double> a{3.0, 1.0, 1.0, 2.0};
    CHECK(kernels::argmin_first(a) == 1);
    const std::vector<double> b{inf, inf};
    CHECK(kernels::argmin_first(b) == 2);
    const std::vector<double> c{inf, 0.0, 0.0};
    CHECK(kernels::argmin_first(c) == 1);
}
