#include "infl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "infl/decomposition.hpp"
#include "infl/errors.hpp"
#include "infl/growthfit.hpp"
#include "infl/hyperinflation.hpp"
#include "infl/series.hpp"

namespace infl::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");

    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: digest initialisation failed");
    }
    std::vector<char> buffer(1 << 16);
    while (in) {
        in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &length);

    std::string hex;
    hex.reserve(2 * length);
    char byte[3];
    for (unsigned int i = 0; i < length; ++i) {
        std::snprintf(byte, sizeof byte, "%02x", digest[i]);
        hex += byte;
    }
    return hex;
}

namespace {

struct CommonOptions {
    std::optional<std::int64_t> ref;
    std::string unit;
    std::string out_dir = ".";
};

// A finished run: everything is computed before anything touches the disk.
struct Outcome {
    Json report;
    std::vector<std::pair<std::string, std::string>> files;  // name, contents
};

std::string fmt_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json fit_json(const std::string& name, const GrowthFit& f) {
    Json j;
    j["series"] = name;
    j["lambda"] = f.lambda;
    j["ci_low"] = f.ci_low;
    j["ci_high"] = f.ci_high;
    j["std_error"] = f.std_error;
    j["r_squared"] = f.r_squared;
    j["r_squared_pct"] = display_percent(f.r_squared);
    j["avg_growth_rate"] = f.avg_growth_rate;
    j["avg_growth_rate_pct"] = display_percent(f.avg_growth_rate);
    j["n_obs"] = f.n_obs;
    j["df_residuals"] = f.df_residuals;
    return j;
}

Json input_json(const std::string& path) {
    Json j;
    j["file"] = fs::path(path).filename().string();
    j["sha256"] = sha256_file(path);
    return j;
}

void require_finite(const Json& j, const std::string& where) {
    if (j.is_number_float() && !std::isfinite(j.get<double>())) {
        throw NumericalError("non-finite value in report field '" + where + "'");
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) require_finite(value, where.empty() ? key : where + "." + key);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) require_finite(j[i], where + "[" + std::to_string(i) + "]");
    }
}

TimeSeries load(const std::string& path, const std::string& name, PeriodUnit unit,
                const std::optional<std::int64_t>& ref) {
    CsvOptions options;
    options.name = name;
    options.unit = unit;
    TimeSeries series = load_series(path, options);
    return ref ? series.rebased(*ref) : series;
}

void fit_warnings(const std::string& name, const GrowthFit& f, const RelativeLogSeries& s, Json& warnings) {
    const bool constant = std::all_of(s.points.begin(), s.points.end(), [](const LogPoint& p) { return p.y == 0.0; });
    if (constant) warnings.push_back(name + ": series is constant; lambda = 0");
    if (f.zero_residual) warnings.push_back(name + ": zero-residual fit; R^2 reported as 1 and CI width 0");
}

Outcome run_fit(const std::string& file, const CommonOptions& common) {
    const PeriodUnit unit = parse_period_unit(common.unit.empty() ? "annual" : common.unit);
    const std::string name = fs::path(file).stem().string();
    const TimeSeries series = load(file, name, unit, common.ref);
    const RelativeLogSeries rel = normalize_to_reference(series);
    const GrowthFit fit = fit_rate_constant(rel);

    Outcome o;
    Json& r = o.report;
    r["command"] = "fit";
    r["inputs"] = Json::array({input_json(file)});
    r["unit"] = to_string(unit);
    r["reference_period"] = series.period_of(series.reference_index());
    r["fits"] = Json::array({fit_json(name, fit)});
    r["warnings"] = Json::array();
    fit_warnings(name, fit, rel, r["warnings"]);

    std::ostringstream plot;
    plot << "t,observed,fitted\n";
    for (const auto& p : rel.points) {
        plot << p.t << ',' << fmt_number(p.y) << ',' << fmt_number(fit.lambda * static_cast<double>(p.t)) << '\n';
    }
    o.files.emplace_back("fit_plot.csv", plot.str());
    return o;
}

Outcome run_decompose(const std::vector<std::string>& files, const CommonOptions& common, double tol) {
    const PeriodUnit unit = parse_period_unit(common.unit.empty() ? "annual" : common.unit);
    const TimeSeries bms = load(files[0], "BMS", unit, common.ref);
    const TimeSeries gdp = load(files[1], "GDP", unit, common.ref);
    const TimeSeries sav = load(files[2], "SAV", unit, common.ref);
    const TimeSeries cpi = load(files[3], "CPI", unit, common.ref);
    const DecompositionResult d = decompose_cpi(bms, gdp, sav, cpi);

    Outcome o;
    Json& r = o.report;
    r["command"] = "decompose";
    r["inputs"] = Json::array();
    for (const auto& f : files) r["inputs"].push_back(input_json(f));
    r["unit"] = to_string(unit);
    r["reference_period"] = bms.period_of(bms.reference_index());
    r["fits"] = Json::array({fit_json("BMS", d.bms), fit_json("CPI", d.cpi), fit_json("GDP", d.gdp),
                             fit_json("SAV", d.sav)});

    double max_abs_res = 0.0;
    for (const auto& p : d.residual_series.points) max_abs_res = std::max(max_abs_res, std::abs(p.y));
    const auto scenario = classify_scenario(d.bms.lambda, d.gdp.lambda, d.sav.lambda, tol);

    Json dec;
    dec["residual_fit"] = fit_json("RES", d.residual_fit);
    dec["identity_max_abs_error"] = d.identity_max_abs_error;
    dec["residual_max_abs"] = max_abs_res;
    dec["identity_holds"] = max_abs_res <= 1e-9 && std::abs(d.residual_fit.lambda) <= 1e-9;
    dec["predicted_lambda_cpi"] = predict_cpi_lambda(d.bms.lambda, d.gdp.lambda, d.sav.lambda, d.residual_fit.lambda);
    dec["predicted_lambda_cpi_without_residual"] = scenario.predicted_lambda_cpi;
    dec["money_velocity_log_rate"] = money_velocity_log_rate(d.bms.lambda, d.gdp.lambda);
    dec["scenario"] = to_string(scenario.classification);
    dec["scenario_tolerance"] = tol;
    dec["sav_imputed_count"] = d.imputed_sav_periods.size();
    dec["sav_imputed_periods"] = d.imputed_sav_periods;
    r["decomposition"] = dec;

    r["warnings"] = Json::array();
    fit_warnings("BMS", d.bms, d.vbms, r["warnings"]);
    fit_warnings("CPI", d.cpi, d.vcpi, r["warnings"]);
    fit_warnings("GDP", d.gdp, d.vgdp, r["warnings"]);
    if (!d.imputed_sav_periods.empty()) {
        r["warnings"].push_back("SAV: " + std::to_string(d.imputed_sav_periods.size()) +
                                " periods imputed from the observed-only fit");
    }

    std::ostringstream plot;
    plot << "t,observed,fitted,residual\n";
    for (std::size_t i = 0; i < d.residual_series.points.size(); ++i) {
        const double predicted = d.vbms.points[i].y - d.vgdp.points[i].y - d.vsav.points[i].y;
        plot << d.vcpi.points[i].t << ',' << fmt_number(d.vcpi.points[i].y) << ',' << fmt_number(predicted) << ','
             << fmt_number(d.residual_series.points[i].y) << '\n';
    }
    o.files.emplace_back("decompose_plot.csv", plot.str());
    return o;
}

SearchRange parse_search(const std::string& text) {
    const auto dots = text.find("..");
    std::int64_t lo = 0, hi = 0;
    if (dots == std::string::npos) throw InputError("--search expects lo..hi, got '" + text + "'");
    try {
        std::size_t used = 0;
        lo = std::stoll(text.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument(text);
        const auto rest = text.substr(dots + 2);
        hi = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
    } catch (const std::logic_error&) {
        throw InputError("--search expects lo..hi, got '" + text + "'");
    }
    if (lo > hi) throw InputError("--search: lo exceeds hi");
    return {lo, hi};
}

Outcome run_hyper(const std::string& file, const CommonOptions& common, const std::optional<double>& t_break,
                  const std::string& search) {
    const PeriodUnit unit = parse_period_unit(common.unit.empty() ? "monthly" : common.unit);
    const std::string name = fs::path(file).stem().string();
    const TimeSeries prices = load(file, name, unit, common.ref);
    const EntropySeries series = entropy_series(prices);

    HyperinflationFit fit;
    Json search_json = nullptr;
    if (t_break) {
        fit = fit_hyperinflation(series, *t_break);
    } else {
        const SearchRange range = search.empty() ? full_search_range(series) : parse_search(search);
        const BreakpointResult b = detect_breakpoint(series, range);
        fit = b.fit;
        search_json = Json::object();
        search_json["lo"] = b.candidates.front();
        search_json["hi"] = b.candidates.back();
        search_json["candidates"] = b.candidates.size();
        search_json["sse_total"] = b.sse_total;
    }
    const auto& p = fit.params;

    Outcome o;
    Json& r = o.report;
    r["command"] = "hyper";
    r["inputs"] = Json::array({input_json(file)});
    r["unit"] = to_string(unit);
    r["reference_period"] = prices.period_of(prices.reference_index());
    r["fits"] = Json::array();

    Json h;
    h["lambda1"] = p.lambda1;
    h["v0"] = p.v0;
    h["t_star"] = p.t_star;
    h["lambda2"] = p.lambda2;
    h["constrained_intercept"] = fit.constrained_intercept;
    h["pre_break_growth_rate"] = growth_rate_from_lambda(p.lambda1);
    h["pre_break_growth_rate_pct"] = display_percent(growth_rate_from_lambda(p.lambda1));
    h["acceleration_rate"] = fit.acceleration_rate;
    h["acceleration_pct"] = display_percent(fit.acceleration_rate);
    h["segment1"] = {{"slope", fit.segment1.slope},
                     {"intercept", fit.segment1.intercept},
                     {"r_squared", fit.segment1.r_squared},
                     {"sse", fit.segment1.sse},
                     {"n_obs", fit.segment1.n_obs}};
    h["segment2"] = {{"lambda", p.lambda2},
                     {"intercept", fit.constrained_intercept},
                     {"r_squared", fit.segment2_r_squared},
                     {"sse", fit.segment2_sse},
                     {"n_obs", fit.segment2_n_obs},
                     {"lambda_free", fit.segment2_lambda_free},
                     {"intercept_free", fit.segment2_intercept_free}};
    h["sse_total"] = fit.sse_total;
    h["degenerate_acceleration"] = fit.degenerate_acceleration;
    h["search"] = search_json;
    r["hyper"] = h;
    r["warnings"] = Json::array();
    if (fit.degenerate_acceleration) {
        r["warnings"].push_back(name + ": degenerate acceleration; no second exponential regime detected");
    }

    std::ostringstream semilog, logentropy;
    semilog << "t,observed,fitted\n";
    logentropy << "t,observed,fitted\n";
    for (std::size_t i = 0; i < series.t.size(); ++i) {
        const double model = info_entropy_value(series.t[i], p);
        semilog << fmt_number(series.t[i]) << ',' << fmt_number(series.v[i]) << ',' << fmt_number(model) << '\n';
        if (series.t[i] >= p.t_star && series.v[i] > 0.0 && model > 0.0) {
            logentropy << fmt_number(series.t[i]) << ',' << fmt_number(std::log(series.v[i])) << ','
                       << fmt_number(std::log(model)) << '\n';
        }
    }
    o.files.emplace_back("hyper_plot.csv", semilog.str());
    o.files.emplace_back("hyper_logentropy_plot.csv", logentropy.str());
    return o;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--ref", common.ref, "Reference period (t = 0); earlier rows are dropped");
    cmd->add_option("--unit", common.unit, "Period unit: annual or monthly")->check(CLI::IsMember({"annual", "monthly"}));
    cmd->add_option("--out-dir", common.out_dir, "Directory for the report and plot-data files");
}

void emit(const Outcome& o, const std::string& command, const std::string& out_dir, std::ostream& out) {
    require_finite(o.report, "");
    const std::string text = o.report.dump(2) + "\n";

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    auto write = [&](const std::string& name, const std::string& contents) {
        std::ofstream f(fs::path(out_dir) / name, std::ios::binary);
        f << contents;
        if (!f) throw InputError("cannot write " + (fs::path(out_dir) / name).string());
    };
    write(command + "_report.json", text);
    for (const auto& [name, contents] : o.files) write(name, contents);
    out << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exponential growth rate-constants, CPI decomposition and hyperinflation fits"};
    app.name("inflfit");
    app.require_subcommand(1);

    CommonOptions common;
    std::string series_file;
    auto* fit_cmd = app.add_subcommand("fit", "Through-origin rate-constant fit of one series");
    fit_cmd->add_option("series", series_file, "CSV with period,value rows")->required();
    add_common(fit_cmd, common);

    std::vector<std::string> decompose_files;
    double tol = kDefaultScenarioTolerance;
    auto* dec_cmd = app.add_subcommand("decompose", "CPI decomposition: vCPI = vBMS - vGDP - vSAV - RES");
    dec_cmd->add_option("files", decompose_files, "BMS GDP SAV CPI CSV files")->required()->expected(4);
    dec_cmd->add_option("--tol", tol, "Scenario tolerance per period")->check(CLI::NonNegativeNumber);
    add_common(dec_cmd, common);

    std::optional<double> t_break;
    std::string search;
    auto* hyper_cmd = app.add_subcommand("hyper", "Two-regime double-exponential fit of a price series");
    hyper_cmd->add_option("series", series_file, "CSV with period,price rows")->required();
    auto* break_opt = hyper_cmd->add_option("--break", t_break, "Fixed break time (skips the search)");
    hyper_cmd->add_option("--search", search, "Break search range lo..hi")->excludes(break_opt);
    add_common(hyper_cmd, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputFailure;
    }

    try {
        if (fit_cmd->parsed()) {
            emit(run_fit(series_file, common), "fit", common.out_dir, out);
        } else if (dec_cmd->parsed()) {
            emit(run_decompose(decompose_files, common, tol), "decompose", common.out_dir, out);
        } else {
            emit(run_hyper(series_file, common, t_break, search), "hyper", common.out_dir, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputFailure;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kSuccess;
}

}  // namespace infl::cli
