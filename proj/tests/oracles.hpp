#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library; each routine follows a different route from the code it checks.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

struct ThroughOrigin {
    long double lambda;
    long double r_squared;
    long double sse;
};

// Closed form from the normal equation, accumulated in long double and using
// SSE = sum(y^2) - (sum(t*y))^2 / sum(t^2).
inline ThroughOrigin through_origin(const std::vector<double>& t, const std::vector<double>& y) {
    long double stt = 0, sty = 0, syy = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        stt += static_cast<long double>(t[i]) * t[i];
        sty += static_cast<long double>(t[i]) * y[i];
        syy += static_cast<long double>(y[i]) * y[i];
    }
    const long double sse = syy - sty * sty / stt;
    return {sty / stt, 1.0L - sse / syy, sse};
}

// Student-t density integrated with composite Simpson from 0 to x.
inline double student_t_cdf(double x, double df) {
    const double log_norm = std::lgamma((df + 1) / 2) - std::lgamma(df / 2) - 0.5 * std::log(df * M_PI);
    auto pdf = [&](double u) { return std::exp(log_norm - (df + 1) / 2 * std::log1p(u * u / df)); };
    const int n = 20000;  // even
    const double h = x / n;
    double s = pdf(0) + pdf(x);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * pdf(i * h);
    return 0.5 + s * h / 3.0;
}

inline double student_t_quantile(double p, double df) {
    double lo = 0.0, hi = 100.0;
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        (student_t_cdf(mid, df) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Closed forms: df = 1 (Cauchy) and df = 2.
inline double t_quantile_df1(double p) { return std::tan(M_PI * (p - 0.5)); }
inline double t_quantile_df2(double p) { return (2 * p - 1) / std::sqrt(2 * p * (1 - p)); }

// Double-exponential entropy written out directly.
inline double double_exp_entropy(double t, double lambda1, double v0, double t_star, double lambda2) {
    if (t < t_star) return lambda1 * t + v0;
    return (lambda1 * t_star + v0) * std::exp(lambda2 * (t - t_star));
}

// Ordinary least squares with intercept via the 2x2 normal equations.
struct Line {
    double slope;
    double intercept;
};

inline Line ols(const std::vector<double>& x, const std::vector<double>& y) {
    long double n = x.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += static_cast<long double>(x[i]) * x[i];
        sxy += static_cast<long double>(x[i]) * y[i];
    }
    const long double det = n * sxx - sx * sx;
    return {static_cast<double>((n * sxy - sx * sy) / det), static_cast<double>((sxx * sy - sx * sxy) / det)};
}

}  // namespace oracle
