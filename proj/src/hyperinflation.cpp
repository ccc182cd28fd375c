#include "infl/hyperinflation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "infl/errors.hpp"
#include "infl/kernels/breakpoint_scan.hpp"

namespace infl {

namespace {

double pre_break_entropy(double t, const HyperinflationParams& p) { return p.lambda1 * t + p.v0; }

double post_break_entropy(double t, const HyperinflationParams& p) {
    return pre_break_entropy(p.t_star, p) * std::exp(p.lambda2 * (t - p.t_star));
}

SampleSpaceSize exp_saturating(double v) {
    static const double kMaxLog = std::log(std::numeric_limits<double>::max());
    if (!(v <= kMaxLog)) return {std::numeric_limits<double>::max(), true};
    return {std::exp(v), false};
}

double relative_mismatch(double a, double b) {
    if (a == b) return 0.0;
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace

double info_entropy_value(double t, const HyperinflationParams& p) {
    if (t < 0.0) throw InputError("info_entropy_value: t must be non-negative");
    return t < p.t_star ? pre_break_entropy(t, p) : post_break_entropy(t, p);
}

SampleSpaceSize sample_space_size(double t, const HyperinflationParams& p) {
    return exp_saturating(info_entropy_value(t, p));
}

double continuity_check(const HyperinflationParams& p) {
    const double level = pre_break_entropy(p.t_star, p);
    if (!(level > 0.0)) {
        throw InputError("continuity_check: lambda1 * t_star + v0 must be positive");
    }
    const double before = level;
    const double after = post_break_entropy(p.t_star, p);
    double worst = relative_mismatch(before, after);

    const auto s_before = exp_saturating(before);
    const auto s_after = exp_saturating(after);
    if (s_before.saturated || s_after.saturated) {
        // compare in log space once the sample space leaves the double range
        worst = std::max(worst, s_before.saturated == s_after.saturated ? 0.0 : 1.0);
    } else {
        worst = std::max(worst, relative_mismatch(s_before.value, s_after.value));
    }
    return worst;
}

EntropySeries entropy_series(const TimeSeries& prices) {
    EntropySeries out;
    out.unit = prices.unit();
    out.t.reserve(prices.size());
    out.v.reserve(prices.size());
    const auto ref = prices.reference_index();
    for (const auto& p : prices.points()) {
        if (p.time_index < ref) {
            throw InputError(prices.name() + ": index " + std::to_string(p.time_index) +
                             " precedes the reference period; rebase the series first");
        }
        out.t.push_back(static_cast<double>(p.time_index - ref));
        out.v.push_back(std::log(p.value));
    }
    return out;
}

HyperinflationFit fit_hyperinflation(const EntropySeries& series, double t_star) {
    const auto& t = series.t;
    const auto& v = series.v;
    if (t.size() != v.size()) throw InputError("fit_hyperinflation: t and v differ in length");
    if (!std::isfinite(t_star) || t_star < 0.0) throw InputError("fit_hyperinflation: t_star must be >= 0");

    // segment 1: v = lambda1 * t + v0
    double n1 = 0.0, st = 0.0, sv = 0.0;
    int n2 = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_star) {
            n1 += 1.0;
            st += t[i];
            sv += v[i];
        } else {
            ++n2;
            if (!(v[i] > 0.0)) {
                throw InputError("fit_hyperinflation: post-break entropy must be positive (t = " +
                                 std::to_string(t[i]) + ")");
            }
        }
    }
    if (n1 < kMinSegmentPoints || n2 < kMinSegmentPoints) {
        throw InputError("fit_hyperinflation: need at least " + std::to_string(kMinSegmentPoints) +
                         " points on each side of t_star = " + std::to_string(t_star));
    }

    HyperinflationFit fit;
    const double tbar = st / n1;
    const double vbar = sv / n1;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= t_star) continue;
        const double dx = t[i] - tbar;
        const double dy = v[i] - vbar;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    auto& seg1 = fit.segment1;
    seg1.n_obs = static_cast<int>(n1);
    seg1.slope = sxy / sxx;
    seg1.intercept = vbar - seg1.slope * tbar;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= t_star) continue;
        const double e = v[i] - (seg1.intercept + seg1.slope * t[i]);
        seg1.sse += e * e;
    }
    seg1.r_squared = syy > 0.0 ? 1.0 - seg1.sse / syy : 1.0;

    fit.params.lambda1 = seg1.slope;
    fit.params.v0 = seg1.intercept;
    fit.params.t_star = t_star;
    const double level = pre_break_entropy(t_star, fit.params);
    if (!(level > 0.0)) {
        throw NumericalError("fit_hyperinflation: fitted entropy at the break is not positive");
    }
    fit.constrained_intercept = std::log(level);

    // segment 2: ln v = c + lambda2 * (t - t_star), c pinned
    double sxz = 0.0, sxx2 = 0.0, sx = 0.0, sz = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_star) continue;
        const double x = t[i] - t_star;
        const double z = std::log(v[i]);
        sxz += x * (z - fit.constrained_intercept);
        sxx2 += x * x;
        sx += x;
        sz += z;
    }
    fit.segment2_n_obs = n2;
    fit.params.lambda2 = sxz / sxx2;

    const double xbar = sx / n2;
    const double zbar = sz / n2;
    double cxx = 0.0, cxz = 0.0, total = 0.0, extension_sse = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_star) continue;
        const double x = t[i] - t_star;
        const double z = std::log(v[i]);
        const double e = z - fit.constrained_intercept - fit.params.lambda2 * x;
        fit.segment2_sse += e * e;
        total += (z - fit.constrained_intercept) * (z - fit.constrained_intercept);
        cxx += (x - xbar) * (x - xbar);
        cxz += (x - xbar) * (z - zbar);

        const double line = pre_break_entropy(t[i], fit.params);
        if (line > 0.0) {
            const double d = z - std::log(line);
            extension_sse += d * d;
        } else {
            extension_sse = std::numeric_limits<double>::infinity();
        }
    }
    fit.segment2_r_squared = total > 0.0 ? 1.0 - fit.segment2_sse / total : 1.0;
    fit.segment2_lambda_free = cxz / cxx;
    fit.segment2_intercept_free = zbar - fit.segment2_lambda_free * xbar;
    fit.acceleration_rate = std::expm1(fit.params.lambda2);
    fit.sse_total = seg1.sse + fit.segment2_sse;
    fit.degenerate_acceleration = !(fit.params.lambda2 > 0.0) || extension_sse <= fit.segment2_sse;

    if (!std::isfinite(fit.sse_total) || !std::isfinite(fit.params.lambda2)) {
        throw NumericalError("fit_hyperinflation: non-finite fit");
    }
    return fit;
}

SearchRange full_search_range(const EntropySeries& series) {
    if (series.t.empty()) return {0, -1};
    return {static_cast<std::int64_t>(std::floor(series.t.front())),
            static_cast<std::int64_t>(std::ceil(series.t.back()))};
}

std::vector<std::int64_t> feasible_breakpoints(const EntropySeries& series, SearchRange range) {
    std::vector<std::int64_t> out;
    for (std::int64_t c = range.lo; c <= range.hi; ++c) {
        const double cut = static_cast<double>(c);
        if (cut < 0.0) continue;
        int before = 0, after = 0;
        for (const double x : series.t) (x < cut ? before : after) += 1;
        if (before >= kMinSegmentPoints && after >= kMinSegmentPoints) out.push_back(c);
    }
    return out;
}

BreakpointResult detect_breakpoint(const EntropySeries& series, SearchRange range) {
    BreakpointResult out;
    out.candidates = feasible_breakpoints(series, range);
    if (out.candidates.empty()) {
        throw InputError("detect_breakpoint: no candidate in [" + std::to_string(range.lo) + ", " +
                         std::to_string(range.hi) + "] leaves " + std::to_string(kMinSegmentPoints) +
                         " points on each side");
    }
    out.candidate_sse = kernels::scan_breakpoints_parallel(series, out.candidates);
    const auto best = kernels::argmin_first(out.candidate_sse);
    if (best == out.candidates.size()) {
        throw NumericalError("detect_breakpoint: no candidate produced a valid fit");
    }
    out.t_star = static_cast<double>(out.candidates[best]);
    out.sse_total = out.candidate_sse[best];
    out.fit = fit_hyperinflation(series, out.t_star);
    return out;
}

HyperinflationFit fit_hyperinflation(const EntropySeries& series, std::optional<double> t_star) {
    if (t_star) return fit_hyperinflation(series, *t_star);
    return detect_breakpoint(series, full_search_range(series)).fit;
}

}  // namespace infl
