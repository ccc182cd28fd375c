#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace infl {

enum class PeriodUnit { annual, monthly };

[[nodiscard]] const char* to_string(PeriodUnit unit);
[[nodiscard]] PeriodUnit parse_period_unit(const std::string& text);

struct Observation {
    std::int64_t time_index = 0;
    double value = 0.0;
    bool imputed = false;
};

/**
 * Ordered, strictly positive observations of one economic quantity.
 *
 * Time indices count periods from the earliest loaded period; `origin_period`
 * keeps the calendar label of index 0 (e.g. the year 2001) so several series
 * can be aligned. `reference_index` marks the t = 0 period used for
 * normalization and must be one of the observed indices.
 */
class TimeSeries {
public:
    TimeSeries(std::string name, PeriodUnit unit, std::vector<Observation> points,
               std::int64_t reference_index = 0, std::int64_t origin_period = 0);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] PeriodUnit unit() const noexcept { return unit_; }
    [[nodiscard]] const std::vector<Observation>& points() const noexcept { return points_; }
    [[nodiscard]] std::int64_t reference_index() const noexcept { return reference_index_; }
    [[nodiscard]] std::int64_t origin_period() const noexcept { return origin_period_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

    [[nodiscard]] double reference_value() const;
    [[nodiscard]] std::optional<double> value_at(std::int64_t time_index) const;
    [[nodiscard]] std::int64_t period_of(std::int64_t time_index) const noexcept {
        return origin_period_ + time_index;
    }

    [[nodiscard]] std::size_t imputed_count() const noexcept;
    /// Copy without imputed points.
    [[nodiscard]] TimeSeries observed_only() const;
    /// Copy whose reference (t = 0) is the given calendar period; earlier points are dropped.
    [[nodiscard]] TimeSeries rebased(std::int64_t reference_period) const;

private:
    std::string name_;
    PeriodUnit unit_;
    std::vector<Observation> points_;
    std::int64_t reference_index_;
    std::int64_t origin_period_;
};

struct LogPoint {
    std::int64_t t = 0;
    double y = 0.0;
};

/// ln(value / value(reference)) against periods elapsed since the reference.
struct RelativeLogSeries {
    PeriodUnit unit = PeriodUnit::annual;
    std::vector<LogPoint> points;

    [[nodiscard]] std::vector<double> times() const;
    [[nodiscard]] std::vector<double> values() const;
};

struct CsvOptions {
    std::string name = "series";
    PeriodUnit unit = PeriodUnit::annual;
    std::size_t period_column = 0;
    std::size_t value_column = 1;
    char delimiter = ',';
};

/// Parses `period,value` rows; a non-numeric first row is taken as a header.
[[nodiscard]] TimeSeries parse_series(std::istream& in, const CsvOptions& options,
                                      const std::string& source = "<stream>");
[[nodiscard]] TimeSeries load_series(const std::string& path, const CsvOptions& options);

[[nodiscard]] RelativeLogSeries normalize_to_reference(const TimeSeries& series);

/**
 * Fills every index in `target_indices` that the series does not observe with
 * value(reference) * exp(lambda * t), lambda being the through-origin rate
 * constant of the observed points. Observed points are returned verbatim and
 * filled points carry `imputed = true`.
 */
[[nodiscard]] TimeSeries impute_missing_years(const TimeSeries& sparse,
                                              std::span<const std::int64_t> target_indices);

}  // namespace infl
