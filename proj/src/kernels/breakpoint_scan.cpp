#include "infl/kernels/breakpoint_scan.hpp"

#include <limits>

namespace infl::kernels {

namespace {

double candidate_sse(const EntropySeries& series, std::int64_t candidate) noexcept {
    try {
        return fit_hyperinflation(series, static_cast<double>(candidate)).sse_total;
    } catch (...) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

std::vector<double> scan_breakpoints_serial(const EntropySeries& series, std::span<const std::int64_t> candidates) {
    std::vector<double> sse(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) sse[i] = candidate_sse(series, candidates[i]);
    return sse;
}

std::vector<double> scan_breakpoints_parallel(const EntropySeries& series,
                                              std::span<const std::int64_t> candidates) {
    std::vector<double> sse(candidates.size());
    const auto n = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) sse[i] = candidate_sse(series, candidates[i]);
    return sse;
}

std::size_t argmin_first(std::span<const double> sse) {
    std::size_t best = sse.size();
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sse.size(); ++i) {
        if (sse[i] < best_value) {
            best_value = sse[i];
            best = i;
        }
    }
    return best;
}

}  // namespace infl::kernels
