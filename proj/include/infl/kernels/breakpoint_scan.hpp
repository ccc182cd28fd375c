#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "infl/hyperinflation.hpp"

namespace infl::kernels {

// Total two-segment SSE for every break candidate. Infeasible candidates
// (nonpositive post-break entropy, too few points) score +inf.
//
// The serial version is the reference; the OpenMP version must match it
// bit for bit, since each candidate is evaluated independently.
[[nodiscard]] std::vector<double> scan_breakpoints_serial(const EntropySeries& series,
                                                          std::span<const std::int64_t> candidates);
[[nodiscard]] std::vector<double> scan_breakpoints_parallel(const EntropySeries& series,
                                                            std::span<const std::int64_t> candidates);

// Index of the smallest SSE, first one on ties; candidates.size() if all are +inf.
[[nodiscard]] std::size_t argmin_first(std::span<const double> sse);

}  // namespace infl::kernels
