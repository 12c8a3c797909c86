#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tfdc {

/// One oracle comparison: the largest deviation seen against its tolerance.
struct SuiteResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<std::string> warnings;
};

struct OracleReport {
    std::vector<SuiteResult> suites;

    SuiteResult& add(std::string name, double max_deviation, double tolerance);
    void warn(std::string message);
    [[nodiscard]] bool passed() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

}  // namespace tfdc
