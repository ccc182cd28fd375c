#pragma once

#include <cstdint>
#include <string>

#include "infl/hyperinflation.hpp"
#include "infl/series.hpp"

namespace infl::synth {

enum class NoiseKind { none, gaussian };

/// Gaussian noise is added to ln(value); the t = 0 point is always left exact.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::none;
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

/// value(t) = initial * exp(lambda * t + eps(t)), t = 0 .. n-1.
[[nodiscard]] TimeSeries generate_exponential_series(double lambda, double initial, int n,
                                                     const NoiseSpec& noise = {},
                                                     PeriodUnit unit = PeriodUnit::annual,
                                                     std::string name = "synthetic");

/// value(t) = exp(info_entropy_value(t, p) + eps(t)), t = 0 .. n-1; needs n > t_star + 2.
[[nodiscard]] TimeSeries generate_double_exponential_series(const HyperinflationParams& p, int n,
                                                            const NoiseSpec& noise = {},
                                                            PeriodUnit unit = PeriodUnit::monthly,
                                                            std::string name = "synthetic");

}  // namespace infl::synth
