#pragma once

// Scratch directories and synthetic CSV fixtures for exercising the CLI.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "infl/cli.hpp"
#include "infl/series.hpp"

namespace fixtures {

namespace fs = std::filesystem;

class ScratchDir {
public:
    ScratchDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("inflfit-test-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~ScratchDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    [[nodiscard]] const fs::path& path() const { return path_; }
    [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

    std::string write(const std::string& name, const std::string& contents) const {
        std::ofstream(path_ / name, std::ios::binary) << contents;
        return file(name);
    }

private:
    fs::path path_;
};

inline std::string csv(const infl::TimeSeries& s, const std::string& header = "period,value") {
    std::ostringstream out;
    if (!header.empty()) out << header << '\n';
    char buf[40];
    for (const auto& p : s.points()) {
        std::snprintf(buf, sizeof buf, "%.17g", p.value);
        out << s.period_of(p.time_index) << ',' << buf << '\n';
    }
    return out.str();
}

inline std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

inline RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = infl::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace fixtures
