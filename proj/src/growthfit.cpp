#include "infl/growthfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/distributions/students_t.hpp>

#include "infl/errors.hpp"

namespace infl {

namespace {

// Residuals within this many ulps of the largest |y| are treated as round-off.
constexpr double kRoundoffUlps = 16.0;

}  // namespace

GrowthFit fit_rate_constant(std::span<const double> t, std::span<const double> y) {
    if (t.size() != y.size()) throw InputError("fit_rate_constant: t and y differ in length");
    if (t.size() < 2) throw InputError("fit_rate_constant: need at least 2 points");

    double stt = 0.0, sty = 0.0, syy = 0.0, ymax = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        stt += t[i] * t[i];
        sty += t[i] * y[i];
        syy += y[i] * y[i];
        ymax = std::max(ymax, std::abs(y[i]));
    }
    if (stt == 0.0) throw InputError("fit_rate_constant: all t are zero");

    GrowthFit fit;
    fit.n_obs = static_cast<int>(t.size());
    fit.df_residuals = fit.n_obs - 1;
    fit.lambda = sty / stt;

    double sse = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double e = y[i] - fit.lambda * t[i];
        sse += e * e;
    }
    const double floor = kRoundoffUlps * std::numeric_limits<double>::epsilon() * ymax;
    if (sse <= static_cast<double>(t.size()) * floor * floor) sse = 0.0;

    fit.sse = sse;
    fit.zero_residual = sse == 0.0;
    fit.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
    fit.std_error = std::sqrt(sse / fit.df_residuals / stt);
    const double half_width = t_quantile(0.975, fit.df_residuals) * fit.std_error;
    fit.ci_low = fit.lambda - half_width;
    fit.ci_high = fit.lambda + half_width;
    fit.avg_growth_rate = growth_rate_from_lambda(fit.lambda);

    if (!std::isfinite(fit.lambda) || !std::isfinite(fit.std_error) || !std::isfinite(fit.r_squared)) {
        throw NumericalError("fit_rate_constant: non-finite estimate");
    }
    return fit;
}

GrowthFit fit_rate_constant(const RelativeLogSeries& series) {
    const auto t = series.times();
    const auto y = series.values();
    return fit_rate_constant(t, y);
}

double growth_rate_from_lambda(double lambda) { return std::expm1(lambda); }

double lambda_from_growth_rate(double r) {
    if (!(r > -1.0)) throw InputError("lambda_from_growth_rate: r must exceed -1");
    return std::log1p(r);
}

double velocity_at(double lambda, double t) {
    if (t < 0.0) throw InputError("velocity_at: t must be non-negative");
    return lambda * t;
}

double t_quantile(double p, std::int64_t df) {
    if (!(p > 0.0 && p < 1.0)) throw InputError("t_quantile: p must lie in (0, 1)");
    if (df < 1) throw InputError("t_quantile: df must be at least 1");
    if (p == 0.5) return 0.0;
    const boost::math::students_t dist(static_cast<double>(df));
    return boost::math::quantile(dist, p);
}

double display_percent(double fraction) { return std::round(fraction * 1000.0) / 10.0; }

}  // namespace infl
