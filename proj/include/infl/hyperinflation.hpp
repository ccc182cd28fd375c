#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "infl/series.hpp"

namespace infl {

/**
 * Two-regime (double-exponential) expansion.
 *
 * Before the break the entropy grows linearly, v(t) = lambda1 * t + v0. From
 * t_star on, the entropy reached at the break is itself expanded
 * exponentially:
 *
 *   v(t) = (lambda1 * t_star + v0) * exp(lambda2 * (t - t_star)),   t >= t_star
 *
 * so ln v(t) is affine in (t - t_star) with intercept ln(lambda1 * t_star + v0).
 * The sample space is exp(v(t)). v0 = 0 gives the generic model; for a price
 * series v0 is the log of the initial price level.
 */
struct HyperinflationParams {
    double lambda1 = 0.0;
    double v0 = 0.0;
    double t_star = 0.0;
    double lambda2 = 0.0;
};

struct SampleSpaceSize {
    double value = 0.0;      ///< max double when saturated
    bool saturated = false;  ///< exp(v) exceeds the double range
};

[[nodiscard]] double info_entropy_value(double t, const HyperinflationParams& p);
[[nodiscard]] SampleSpaceSize sample_space_size(double t, const HyperinflationParams& p);

/// Largest relative mismatch between the pre- and post-break branches at t_star,
/// over entropy and sample space. Throws InputError if lambda1 * t_star + v0 <= 0.
[[nodiscard]] double continuity_check(const HyperinflationParams& p);

/// Entropy ("velocity") series: v(t) = ln(price level), t in periods since the reference.
struct EntropySeries {
    PeriodUnit unit = PeriodUnit::monthly;
    std::vector<double> t;
    std::vector<double> v;
};

[[nodiscard]] EntropySeries entropy_series(const TimeSeries& prices);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double sse = 0.0;
    int n_obs = 0;
};

struct HyperinflationFit {
    HyperinflationParams params;
    double constrained_intercept = 0.0;  ///< ln(lambda1 * t_star + v0)
    LineFit segment1;                    ///< v on t, t < t_star, with intercept
    double segment2_sse = 0.0;           ///< ln v space, constrained intercept
    double segment2_r_squared = 0.0;     ///< 1 - SSE / sum((ln v - intercept)^2)
    int segment2_n_obs = 0;
    double segment2_lambda_free = 0.0;   ///< diagnostic: free-intercept slope
    double segment2_intercept_free = 0.0;
    double acceleration_rate = 0.0;      ///< exp(lambda2) - 1
    double sse_total = 0.0;              ///< segment-1 SSE (v) + segment-2 SSE (ln v)
    bool degenerate_acceleration = false;
};

inline constexpr int kMinSegmentPoints = 3;

/**
 * Fits both regimes for a given break. Segment 1 (t < t_star) is ordinary
 * least squares of v on t with an intercept. Segment 2 (t >= t_star) regresses
 * ln v on (t - t_star) with the intercept pinned to ln(lambda1 * t_star + v0).
 *
 * The acceleration is flagged degenerate when lambda2 <= 0 or when extending
 * the segment-1 line explains the post-break points at least as well as the
 * exponential regime does.
 */
[[nodiscard]] HyperinflationFit fit_hyperinflation(const EntropySeries& series, double t_star);

struct SearchRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// Integer break candidates in `range` that leave kMinSegmentPoints on each side.
[[nodiscard]] std::vector<std::int64_t> feasible_breakpoints(const EntropySeries& series, SearchRange range);
[[nodiscard]] SearchRange full_search_range(const EntropySeries& series);

struct BreakpointResult {
    double t_star = 0.0;
    double sse_total = 0.0;
    HyperinflationFit fit;
    std::vector<std::int64_t> candidates;
    std::vector<double> candidate_sse;  ///< +inf where the fit was infeasible
};

/// Grid search minimizing sse_total; ties go to the smallest candidate.
[[nodiscard]] BreakpointResult detect_breakpoint(const EntropySeries& series, SearchRange range);

/// Detects the break over the full feasible range when `t_star` is empty.
[[nodiscard]] HyperinflationFit fit_hyperinflation(const EntropySeries& series, std::optional<double> t_star);

}  // namespace infl
