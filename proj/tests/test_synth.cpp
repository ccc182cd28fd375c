#include <doctest.h>

#include <cmath>

#include "infl/errors.hpp"
#include "infl/growthfit.hpp"
#include "infl/hyperinflation.hpp"
#include "infl/synth.hpp"

using namespace infl;
using synth::NoiseKind;
using synth::NoiseSpec;

TEST_CASE("generate_exponential_series follows the formula") {
    const auto s = synth::generate_exponential_series(0.05, 1.0, 3);
    REQUIRE(s.size() == 3);
    CHECK(s.points()[0].value == 1.0);
    CHECK(s.points()[1].value == doctest::Approx(std::exp(0.05)).epsilon(1e-15));
    CHECK(s.points()[2].value == doctest::Approx(std::exp(0.10)).epsilon(1e-15));

    const auto fit = fit_rate_constant(normalize_to_reference(synth::generate_exponential_series(0.0555, 1.0, 19)));
    CHECK(std::abs(fit.lambda - 0.0555) <= 1e-12);
    CHECK(fit.r_squared == 1.0);

    CHECK_THROWS_AS((void)synth::generate_exponential_series(0.05, 1.0, 1), InputError);
    CHECK_THROWS_AS((void)synth::generate_exponential_series(0.05, 0.0, 5), InputError);
    CHECK_THROWS_AS((void)synth::generate_exponential_series(0.05, 1.0, 5, {NoiseKind::gaussian, -1.0, 0}), InputError);
}

TEST_CASE("noise is deterministic, log-space and leaves t = 0 exact") {
    const NoiseSpec noise{NoiseKind::gaussian, 0.1, 42};
    const auto a = synth::generate_exponential_series(0.03, 5.0, 30, noise);
    const auto b = synth::generate_exponential_series(0.03, 5.0, 30, noise);
    const auto c = synth::generate_exponential_series(0.03, 5.0, 30, {NoiseKind::gaussian, 0.1, 43});
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.points()[i].value == b.points()[i].value);
        CHECK(a.points()[i].value > 0.0);
        differs = differs || a.points()[i].value != c.points()[i].value;
    }
    CHECK(differs);
    CHECK(a.points()[0].value == 5.0);

    const auto none = synth::generate_exponential_series(0.03, 5.0, 30);
    const auto zero_sigma = synth::generate_exponential_series(0.03, 5.0, 30, {NoiseKind::gaussian, 0.0, 7});
    for (std::size_t i = 0; i < none.size(); ++i) CHECK(none.points()[i].value == zero_sigma.points()[i].value);
}

TEST_CASE("generate_double_exponential_series") {
    const HyperinflationParams weimar{0.1001, std::log(10.0), 23.0, 0.112};
    const auto s = synth::generate_double_exponential_series(weimar, 42);
    REQUIRE(s.size() == 42);
    CHECK(s.unit() == PeriodUnit::monthly);
    CHECK(s.points()[0].value == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(s.points()[23].value == doctest::Approx(99.97149476411002).epsilon(1e-12));
    for (const auto& p : s.points()) CHECK(p.value > 0.0);

    const auto fit = fit_hyperinflation(entropy_series(s), 23.0);
    CHECK(std::abs(fit.params.lambda1 - weimar.lambda1) <= 1e-6);
    CHECK(std::abs(fit.params.v0 - weimar.v0) <= 1e-6);
    CHECK(std::abs(fit.params.lambda2 - weimar.lambda2) <= 1e-6);

    CHECK_THROWS_AS((void)synth::generate_double_exponential_series(weimar, 25), InputError);
}

TEST_CASE("zero acceleration matches the single exponential up to the break, then freezes") {
    const HyperinflationParams p{0.07, std::log(3.0), 10.0, 0.0};
    const auto dbl = synth::generate_double_exponential_series(p, 20);
    const auto single = synth::generate_exponential_series(0.07, 3.0, 20, {}, PeriodUnit::monthly);
    for (int t = 0; t <= 10; ++t) {
        CHECK(dbl.points()[t].value == doctest::Approx(single.points()[t].value).epsilon(1e-12));
    }
    for (int t = 10; t < 20; ++t) {
        CHECK(dbl.points()[t].value == doctest::Approx(dbl.points()[10].value).epsilon(1e-15));
    }
}
