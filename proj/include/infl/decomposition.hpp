#pragma once

#include <cstdint>
#include <vector>

#include "infl/growthfit.hpp"
#include "infl/series.hpp"

namespace infl {

/// vCPI(t) = vBMS(t) - vGDP(t) - vSAV(t) - RES(t), with RES the closing term.
struct DecompositionResult {
    GrowthFit bms;
    GrowthFit gdp;
    GrowthFit sav;  ///< observed savings points only
    GrowthFit cpi;
    RelativeLogSeries vbms;
    RelativeLogSeries vgdp;
    RelativeLogSeries vsav;  ///< on the common grid, imputed where missing
    RelativeLogSeries vcpi;
    RelativeLogSeries residual_series;
    GrowthFit residual_fit;
    double identity_max_abs_error = 0.0;
    std::vector<std::int64_t> imputed_sav_periods;
};

enum class Scenario { stagflation, deflation, recession, baseline };

[[nodiscard]] const char* to_string(Scenario scenario);

struct ScenarioOutcome {
    double predicted_lambda_cpi = 0.0;
    Scenario classification = Scenario::baseline;
};

inline constexpr double kDefaultScenarioTolerance = 0.001;

/// RES(t) = vBMS(t) - vGDP(t) - vSAV(t) - vCPI(t); the four grids must match.
[[nodiscard]] RelativeLogSeries residual_series(const RelativeLogSeries& vbms, const RelativeLogSeries& vgdp,
                                                const RelativeLogSeries& vsav, const RelativeLogSeries& vcpi);

/**
 * Normalizes and fits the four series and builds the residual term.
 *
 * BMS, GDP and CPI must cover the same calendar periods with the same
 * reference period. Savings may be sparse: missing periods are imputed from
 * the observed-only fit before the residual is formed, while the reported
 * savings fit keeps the observed-only degrees of freedom.
 */
[[nodiscard]] DecompositionResult decompose_cpi(const TimeSeries& bms, const TimeSeries& gdp,
                                                const TimeSeries& sav, const TimeSeries& cpi);

[[nodiscard]] double predict_cpi_lambda(double lambda_bms, double lambda_gdp, double lambda_sav,
                                        double lambda_res = 0.0);

/// Precedence: recession > deflation > stagflation > baseline.
[[nodiscard]] ScenarioOutcome classify_scenario(double lambda_bms, double lambda_gdp, double lambda_sav,
                                                double tol = kDefaultScenarioTolerance);

/// Per-period rate of change of ln(velocity of money) = -(lambda_bms - lambda_gdp).
[[nodiscard]] double money_velocity_log_rate(double lambda_bms, double lambda_gdp);

}  // namespace infl
