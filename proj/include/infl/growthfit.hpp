#pragma once

#include <cstdint>
#include <span>

#include "infl/series.hpp"

namespace infl {

/// Through-origin fit of y = lambda * t.
struct GrowthFit {
    double lambda = 0.0;
    double ci_low = 0.0;   ///< 95% two-sided
    double ci_high = 0.0;
    double std_error = 0.0;
    double r_squared = 1.0;  ///< uncentered: 1 - SSE / sum(y^2)
    double sse = 0.0;
    double avg_growth_rate = 0.0;  ///< exp(lambda) - 1
    int n_obs = 0;
    int df_residuals = 0;  ///< n_obs - 1
    bool zero_residual = false;
};

/**
 * Least squares of y on t with the intercept fixed at zero.
 *
 *   lambda = sum(t*y) / sum(t^2),  SE = sqrt(SSE / (n - 1) / sum(t^2))
 *
 * The CI uses the Student-t quantile with n - 1 degrees of freedom. When the
 * residuals are at round-off level the fit is reported as exact: SSE = 0,
 * R^2 = 1, CI width 0 and `zero_residual` set.
 */
[[nodiscard]] GrowthFit fit_rate_constant(std::span<const double> t, std::span<const double> y);
[[nodiscard]] GrowthFit fit_rate_constant(const RelativeLogSeries& series);

[[nodiscard]] double growth_rate_from_lambda(double lambda);
/// ln(1 + r); throws InputError for r <= -1.
[[nodiscard]] double lambda_from_growth_rate(double r);
/// Information entropy ("velocity") of an exponential process after t periods.
[[nodiscard]] double velocity_at(double lambda, double t);

/// Student-t quantile: P(T <= x) = p with `df` degrees of freedom.
[[nodiscard]] double t_quantile(double p, std::int64_t df);

/// Fraction -> percent rounded to 0.1 point (0.05707 -> 5.7).
[[nodiscard]] double display_percent(double fraction);

}  // namespace infl
