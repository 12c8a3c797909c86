#include "tfdc/oracle_report.hpp"

#include <algorithm>
#include <cmath>

namespace tfdc {

SuiteResult& OracleReport::add(std::string name, double max_deviation, double tolerance)
{
    SuiteResult r;
    r.name = std::move(name);
    r.max_deviation = max_deviation;
    r.tolerance = tolerance;
    r.passed = std::isfinite(max_deviation) && max_deviation <= tolerance;
    suites.push_back(std::move(r));
    return suites.back();
}

void OracleReport::warn(std::string message)
{
    if (suites.empty()) return;
    suites.back().warnings.push_back(std::move(message));
}

bool OracleReport::passed() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

nlohmann::json OracleReport::to_json() const
{
    nlohmann::json out;
    out["passed"] = passed();
    auto& arr = out["suites"] = nlohmann::json::array();
    for (const auto& s : suites) {
        arr.push_back({{"name", s.name},
                       {"max_deviation", s.max_deviation},
                       {"tolerance", s.tolerance},
                       {"passed", s.passed},
                       {"warnings", s.warnings}});
    }
    return out;
}

}  // namespace tfdc
