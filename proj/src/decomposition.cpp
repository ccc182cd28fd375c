#include "infl/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infl/errors.hpp"

namespace infl {

const char* to_string(Scenario scenario) {
    switch (scenario) {
        case Scenario::stagflation: return "stagflation";
        case Scenario::deflation: return "deflation";
        case Scenario::recession: return "recession";
        case Scenario::baseline: return "baseline";
    }
    return "baseline";
}

namespace {

void require_same_grid(const RelativeLogSeries& a, const RelativeLogSeries& b, const char* what) {
    if (a.unit != b.unit) throw InputError(std::string("residual_series: unit mismatch for ") + what);
    const bool same = std::equal(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                                 [](const LogPoint& x, const LogPoint& y) { return x.t == y.t; });
    if (!same) throw InputError(std::string("residual_series: time grid mismatch for ") + what);
}

std::vector<std::int64_t> calendar_periods(const TimeSeries& s) {
    std::vector<std::int64_t> out;
    out.reserve(s.size());
    for (const auto& p : s.points()) out.push_back(s.period_of(p.time_index));
    return out;
}

}  // namespace

RelativeLogSeries residual_series(const RelativeLogSeries& vbms, const RelativeLogSeries& vgdp,
                                  const RelativeLogSeries& vsav, const RelativeLogSeries& vcpi) {
    require_same_grid(vbms, vgdp, "GDP");
    require_same_grid(vbms, vsav, "SAV");
    require_same_grid(vbms, vcpi, "CPI");

    RelativeLogSeries res{vbms.unit, {}};
    res.points.reserve(vbms.points.size());
    for (std::size_t i = 0; i < vbms.points.size(); ++i) {
        const double r = vbms.points[i].y - vgdp.points[i].y - vsav.points[i].y - vcpi.points[i].y;
        res.points.push_back({vbms.points[i].t, r});
    }
    return res;
}

DecompositionResult decompose_cpi(const TimeSeries& bms, const TimeSeries& gdp, const TimeSeries& sav,
                                  const TimeSeries& cpi) {
    for (const TimeSeries* s : {&gdp, &sav, &cpi}) {
        if (s->unit() != bms.unit()) throw InputError(s->name() + ": period unit differs from " + bms.name());
        if (s->period_of(s->reference_index()) != bms.period_of(bms.reference_index())) {
            throw InputError(s->name() + ": reference period differs from " + bms.name());
        }
    }
    const auto grid = calendar_periods(bms);
    for (const TimeSeries* s : {&gdp, &cpi}) {
        if (calendar_periods(*s) != grid) {
            throw InputError(s->name() + ": periods do not match " + bms.name());
        }
    }

    // Savings onto the common grid, expressed as indices of the savings series.
    std::vector<std::int64_t> sav_targets;
    sav_targets.reserve(grid.size());
    for (const auto period : grid) sav_targets.push_back(period - sav.origin_period());
    const TimeSeries sav_observed = sav.observed_only();
    for (const auto period : calendar_periods(sav_observed)) {
        if (!std::binary_search(grid.begin(), grid.end(), period)) {
            throw InputError(sav.name() + ": period " + std::to_string(period) + " lies outside the common grid");
        }
    }
    const TimeSeries sav_full =
        sav_observed.size() == grid.size() ? sav_observed : impute_missing_years(sav_observed, sav_targets);

    DecompositionResult out;
    out.vbms = normalize_to_reference(bms);
    out.vgdp = normalize_to_reference(gdp);
    out.vcpi = normalize_to_reference(cpi);
    out.vsav = normalize_to_reference(sav_full);

    out.bms = fit_rate_constant(out.vbms);
    out.gdp = fit_rate_constant(out.vgdp);
    out.cpi = fit_rate_constant(out.vcpi);
    out.sav = fit_rate_constant(normalize_to_reference(sav_observed));

    for (const auto& p : sav_full.points()) {
        if (p.imputed) out.imputed_sav_periods.push_back(sav_full.period_of(p.time_index));
    }

    out.residual_series = residual_series(out.vbms, out.vgdp, out.vsav, out.vcpi);
    out.residual_fit = fit_rate_constant(out.residual_series);

    double worst = 0.0;
    for (std::size_t i = 0; i < out.residual_series.points.size(); ++i) {
        const double closure = out.vbms.points[i].y - out.vgdp.points[i].y - out.vsav.points[i].y -
                               out.vcpi.points[i].y - out.residual_series.points[i].y;
        worst = std::max(worst, std::abs(closure));
    }
    out.identity_max_abs_error = worst;
    return out;
}

double predict_cpi_lambda(double lambda_bms, double lambda_gdp, double lambda_sav, double lambda_res) {
    return lambda_bms - lambda_gdp - lambda_sav - lambda_res;
}

ScenarioOutcome classify_scenario(double lambda_bms, double lambda_gdp, double lambda_sav, double tol) {
    if (!(tol >= 0.0)) throw InputError("classify_scenario: tol must be non-negative");
    ScenarioOutcome out;
    out.predicted_lambda_cpi = predict_cpi_lambda(lambda_bms, lambda_gdp, lambda_sav);
    if (lambda_gdp < -tol) {
        out.classification = Scenario::recession;
    } else if (out.predicted_lambda_cpi < -tol) {
        out.classification = Scenario::deflation;
    } else if (std::abs(lambda_gdp) <= tol && std::abs(lambda_sav) <= tol) {
        out.classification = Scenario::stagflation;
    } else {
        out.classification = Scenario::baseline;
    }
    return out;
}

double money_velocity_log_rate(double lambda_bms, double lambda_gdp) { return -(lambda_bms - lambda_gdp); }

}  // namespace infl
