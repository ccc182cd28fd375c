#include "infl/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

#include "infl/errors.hpp"
#include "infl/growthfit.hpp"

namespace infl {

const char* to_string(PeriodUnit unit) {
    return unit == PeriodUnit::annual ? "annual" : "monthly";
}

PeriodUnit parse_period_unit(const std::string& text) {
    if (text == "annual") return PeriodUnit::annual;
    if (text == "monthly") return PeriodUnit::monthly;
    throw InputError("unknown period unit '" + text + "' (expected annual or monthly)");
}

TimeSeries::TimeSeries(std::string name, PeriodUnit unit, std::vector<Observation> points,
                       std::int64_t reference_index, std::int64_t origin_period)
    : name_(std::move(name)),
      unit_(unit),
      points_(std::move(points)),
      reference_index_(reference_index),
      origin_period_(origin_period) {
    if (points_.empty()) throw InputError(name_ + ": series has no observations");
    bool has_reference = false;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (!(p.value > 0.0) || !std::isfinite(p.value)) {
            throw InputError(name_ + ": value at index " + std::to_string(p.time_index) +
                             " must be positive and finite");
        }
        if (i > 0 && p.time_index <= points_[i - 1].time_index) {
            throw InputError(name_ + ": time indices must be strictly increasing (index " +
                             std::to_string(p.time_index) + ")");
        }
        has_reference = has_reference || p.time_index == reference_index_;
    }
    if (!has_reference) {
        throw InputError(name_ + ": reference index " + std::to_string(reference_index_) +
                         " is not an observed period");
    }
}

double TimeSeries::reference_value() const { return *value_at(reference_index_); }

std::optional<double> TimeSeries::value_at(std::int64_t time_index) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), time_index,
                               [](const Observation& p, std::int64_t t) { return p.time_index < t; });
    if (it == points_.end() || it->time_index != time_index) return std::nullopt;
    return it->value;
}

std::size_t TimeSeries::imputed_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(points_.begin(), points_.end(), [](const Observation& p) { return p.imputed; }));
}

TimeSeries TimeSeries::observed_only() const {
    std::vector<Observation> kept;
    std::copy_if(points_.begin(), points_.end(), std::back_inserter(kept),
                 [](const Observation& p) { return !p.imputed; });
    return TimeSeries(name_, unit_, std::move(kept), reference_index_, origin_period_);
}

TimeSeries TimeSeries::rebased(std::int64_t reference_period) const {
    const std::int64_t ref = reference_period - origin_period_;
    std::vector<Observation> kept;
    for (const auto& p : points_) {
        if (p.time_index >= ref) kept.push_back({p.time_index - ref, p.value, p.imputed});
    }
    if (kept.empty() || kept.front().time_index != 0) {
        throw InputError(name_ + ": reference period " + std::to_string(reference_period) +
                         " is not an observed period");
    }
    return TimeSeries(name_, unit_, std::move(kept), 0, reference_period);
}

std::vector<double> RelativeLogSeries::times() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(static_cast<double>(p.t));
    return out;
}

std::vector<double> RelativeLogSeries::values() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.y);
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(delimiter, start);
        fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return fields;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::optional<double> parse_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

bool is_four_digit_year(std::string_view s) {
    return s.size() == 4 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct RawRow {
    std::int64_t period;
    double value;
    std::size_t line;
};

}  // namespace

TimeSeries parse_series(std::istream& in, const CsvOptions& options, const std::string& source) {
    std::vector<RawRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool seen_content = false;
    const std::size_t needed = std::max(options.period_column, options.value_column) + 1;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
        if (trim(view).empty()) continue;

        const auto fields = split(view, options.delimiter);
        const auto where = source + ": row " + std::to_string(line_no);
        if (fields.size() < needed) {
            throw InputError(where + ": expected at least " + std::to_string(needed) + " columns");
        }
        const auto period_text = fields[options.period_column];
        const auto value_text = fields[options.value_column];
        const auto period = parse_int(period_text);
        if (!period) {
            if (!seen_content) {  // header
                seen_content = true;
                continue;
            }
            throw InputError(where + ": unparseable period '" + std::string(period_text) + "'");
        }
        seen_content = true;
        if (options.unit == PeriodUnit::annual && !is_four_digit_year(period_text)) {
            throw InputError(where + ": annual period must be a 4-digit year, got '" +
                             std::string(period_text) + "'");
        }
        const auto value = parse_double(value_text);
        if (!value || !std::isfinite(*value)) {
            throw InputError(where + ": unparseable value '" + std::string(value_text) + "'");
        }
        if (!(*value > 0.0)) {
            throw InputError(where + ": value " + std::string(value_text) +
                             " is not positive (logarithm undefined)");
        }
        rows.push_back({*period, *value, line_no});
    }
    if (rows.empty()) throw InputError(source + ": no data rows");

    std::stable_sort(rows.begin(), rows.end(),
                     [](const RawRow& a, const RawRow& b) { return a.period < b.period; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].period == rows[i - 1].period) {
            throw InputError(source + ": row " + std::to_string(rows[i].line) + ": duplicate period " +
                             std::to_string(rows[i].period) + " (first seen on row " +
                             std::to_string(rows[i - 1].line) + ")");
        }
    }

    const std::int64_t origin = rows.front().period;
    std::vector<Observation> points;
    points.reserve(rows.size());
    for (const auto& r : rows) points.push_back({r.period - origin, r.value, false});
    return TimeSeries(options.name, options.unit, std::move(points), 0, origin);
}

TimeSeries load_series(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    return parse_series(in, options, path);
}

RelativeLogSeries normalize_to_reference(const TimeSeries& series) {
    const double ref_value = series.reference_value();
    const std::int64_t ref = series.reference_index();
    RelativeLogSeries out{series.unit(), {}};
    out.points.reserve(series.size());
    for (const auto& p : series.points()) {
        if (p.time_index < ref) {
            throw InputError(series.name() + ": index " + std::to_string(p.time_index) +
                             " precedes the reference period; rebase the series first");
        }
        const double y = p.time_index == ref ? 0.0 : std::log(p.value / ref_value);
        if (!std::isfinite(y)) {
            throw NumericalError(series.name() + ": log-ratio at index " +
                                 std::to_string(p.time_index) + " is not finite");
        }
        out.points.push_back({p.time_index - ref, y});
    }
    return out;
}

TimeSeries impute_missing_years(const TimeSeries& sparse, std::span<const std::int64_t> target_indices) {
    if (sparse.size() < 2) {
        throw InputError(sparse.name() + ": imputation needs at least 2 observed points");
    }
    std::vector<std::int64_t> targets(target_indices.begin(), target_indices.end());
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (const auto& p : sparse.points()) {
        if (!std::binary_search(targets.begin(), targets.end(), p.time_index)) {
            throw InputError(sparse.name() + ": observed index " + std::to_string(p.time_index) +
                             " missing from the target grid");
        }
    }

    const GrowthFit fit = fit_rate_constant(normalize_to_reference(sparse));
    const double ref_value = sparse.reference_value();
    const std::int64_t ref = sparse.reference_index();

    std::vector<Observation> filled;
    filled.reserve(targets.size());
    auto next_observed = sparse.points().begin();
    for (const auto t : targets) {
        if (next_observed != sparse.points().end() && next_observed->time_index == t) {
            filled.push_back(*next_observed++);
            continue;
        }
        const double value = ref_value * std::exp(fit.lambda * static_cast<double>(t - ref));
        filled.push_back({t, value, true});
    }
    return TimeSeries(sparse.name(), sparse.unit(), std::move(filled), ref, sparse.origin_period());
}

}  // namespace infl
