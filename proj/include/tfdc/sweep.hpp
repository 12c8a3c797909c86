#pragma once

// Parameter sweeps behind the command-line tool: complexity time series,
// β and ω sweeps of the half-period complexity and oscillation amplitude,
// the Lloyd-bound scan, and the oracle verification run.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tfdc/fock_oracle.hpp"
#include "tfdc/oracle_report.hpp"
#include "tfdc/params.hpp"

namespace tfdc::sweep {

enum class Mode { time_series, beta_sweep, omega_sweep, lloyd, verify };
enum class Format { csv, json };

std::string_view mode_name(Mode m);
Mode parse_mode(std::string_view s);
std::string_view format_name(Format f);
Format parse_format(std::string_view s);

/// start:stop:count[:log]
struct Range {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
    bool log_spaced = false;

    void validate() const;
    [[nodiscard]] std::vector<double> values() const;
    [[nodiscard]] std::string to_string() const;
    static Range parse(std::string_view text);

    bool operator==(const Range&) const = default;
};

/// Configuration error (exit code 1 in the CLI).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepConfig {
    Mode mode = Mode::time_series;
    PhysicalParams params;
    /// Time-series curves. 0 requests the β → 0 limit curve, inf zero temperature.
    std::vector<double> betas;
    /// Swept variable: t for time-series, β for beta-sweep and lloyd, ω for omega-sweep.
    std::optional<Range> range;
    /// Time samples per period 𝒯 = π/ω (time-series), or grid size of the
    /// Lloyd maximization.
    int samples_per_period = 0;
    int fock_dim = fock::kDefaultDim;
    std::string output;  ///< empty: stdout
    Format format = Format::csv;

    /// Figure defaults for a mode (ω_R = 1, ħ = m = 1, ω and β per figure).
    static SweepConfig defaults_for(Mode mode);

    /// Range and sample count after filling mode defaults.
    [[nodiscard]] Range resolved_range() const;
    [[nodiscard]] int resolved_samples() const;

    /// Throws ConfigError.
    void validate() const;

    [[nodiscard]] nlohmann::json to_json() const;
    static SweepConfig from_json(const nlohmann::json& j);

    bool operator==(const SweepConfig&) const = default;
};

struct Column {
    std::string name;
    std::string unit;
};

struct SweepTable {
    std::vector<Column> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    [[nodiscard]] std::size_t column_index(std::string_view name) const;
    [[nodiscard]] std::vector<double> column(std::string_view name) const;
    void add_row(std::vector<double> row);
};

SweepTable run_time_series(const SweepConfig& config);
SweepTable run_beta_sweep(const SweepConfig& config);
SweepTable run_omega_sweep(const SweepConfig& config);
/// Columns beta, max_rate, bound, satisfied (1/0), argmax_t.
SweepTable run_lloyd(const SweepConfig& config);
OracleReport run_verify(const SweepConfig& config);

/// Rows of a Lloyd table whose `satisfied` column is 0.
std::vector<std::size_t> lloyd_violations(const SweepTable& table);

std::string to_csv(const SweepTable& table);
nlohmann::json to_json(const SweepTable& table);
/// Writes in config.format to config.output (or stdout when empty).
void write_table(const SweepTable& table, const SweepConfig& config);

/// Worker count: hardware concurrency, capped by TFD_SEED_THREADS.
unsigned thread_budget();

/// Shortest-round-trip-safe decimal (17 significant digits, "inf"/"-inf"/"nan").
std::string format_number(double v);

}  // namespace tfdc::sweep
