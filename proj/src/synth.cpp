#include "infl/synth.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "infl/errors.hpp"

namespace infl::synth {

namespace {

class LogNoise {
public:
    explicit LogNoise(const NoiseSpec& spec) : spec_(spec), rng_(spec.seed) {
        if (!(spec.sigma >= 0.0)) throw InputError("NoiseSpec: sigma must be non-negative");
    }

    double operator()(int t) {
        if (t == 0 || spec_.kind == NoiseKind::none) return 0.0;
        return spec_.sigma * normal_(rng_);
    }

private:
    NoiseSpec spec_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace

TimeSeries generate_exponential_series(double lambda, double initial, int n, const NoiseSpec& noise,
                                       PeriodUnit unit, std::string name) {
    if (n < 2) throw InputError("generate_exponential_series: n must be at least 2");
    if (!(initial > 0.0)) throw InputError("generate_exponential_series: initial must be positive");
    LogNoise eps(noise);
    std::vector<Observation> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        points.push_back({t, initial * std::exp(lambda * t + eps(t)), false});
    }
    return TimeSeries(std::move(name), unit, std::move(points));
}

TimeSeries generate_double_exponential_series(const HyperinflationParams& p, int n, const NoiseSpec& noise,
                                              PeriodUnit unit, std::string name) {
    if (!(static_cast<double>(n) > p.t_star + 2.0)) {
        throw InputError("generate_double_exponential_series: n must exceed t_star + 2");
    }
    LogNoise eps(noise);
    std::vector<Observation> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        const double value = std::exp(info_entropy_value(t, p) + eps(t));
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw NumericalError("generate_double_exponential_series: value at t = " + std::to_string(t) +
                                 " leaves the double range");
        }
        points.push_back({t, value, false});
    }
    return TimeSeries(std::move(name), unit, std::move(points));
}

}  // namespace infl::synth
