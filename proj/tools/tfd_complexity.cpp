// tfd-complexity: sweeps of TFD complexity for a charged particle in a
// magnetic field, the Lloyd-bound scan, and the oracle verification run.
//
// Exit codes: 0 ok, 1 usage/config error, 2 verification failure,
// 3 Lloyd-bound violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tfdc/sweep.hpp"

namespace {

using namespace tfdc;
using namespace tfdc::sweep;

struct Flags {
    std::string mode = "time-series";
    std::optional<double> omega, omega_ref, hbar, mass;
    std::vector<std::string> betas;
    std::optional<std::string> range;
    std::optional<int> samples;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<int> fock_dim;
    std::string config_file;
    bool print_config = false;
};

SweepConfig resolve(const Flags& f)
{
    SweepConfig c;
    if (!f.config_file.empty()) {
        std::ifstream in(f.config_file);
        if (!in) throw ConfigError(fmt::format("cannot read config '{}'", f.config_file));
        try {
            c = SweepConfig::from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(fmt::format("bad config '{}': {}", f.config_file, e.what()));
        }
    } else {
        c = SweepConfig::defaults_for(parse_mode(f.mode));
    }
    if (f.omega) c.params.omega = *f.omega;
    if (f.omega_ref) c.params.omega_ref = *f.omega_ref;
    if (f.hbar) c.params.hbar = *f.hbar;
    if (f.mass) c.params.mass = *f.mass;
    if (!f.betas.empty()) {
        std::vector<double> betas;
        try {
            for (const auto& b : f.betas) betas.push_back(parse_beta(b));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        if (c.mode == Mode::time_series)
            c.betas = betas;
        else if (betas.size() == 1)
            c.params.beta = betas.front();
        else
            throw ConfigError("--beta may repeat only in time-series mode");
    }
    if (f.range) c.range = Range::parse(*f.range);
    if (f.samples) c.samples_per_period = *f.samples;
    if (f.out) c.output = *f.out;
    if (f.format) c.format = parse_format(*f.format);
    if (f.fock_dim) c.fock_dim = *f.fock_dim;
    c.validate();
    return c;
}

int run(const SweepConfig& c)
{
    switch (c.mode) {
    case Mode::time_series: write_table(run_time_series(c), c); return 0;
    case Mode::beta_sweep: write_table(run_beta_sweep(c), c); return 0;
    case Mode::omega_sweep: write_table(run_omega_sweep(c), c); return 0;
    case Mode::lloyd: {
        const auto table = run_lloyd(c);
        write_table(table, c);
        const auto bad = lloyd_violations(table);
        if (bad.empty()) return 0;
        std::cerr << fmt::format("Lloyd bound violated at {} beta value(s):\n", bad.size());
        for (auto i : bad) {
            const auto& r = table.rows[i];
            std::cerr << fmt::format("  beta={} max_rate={} bound={} argmax_t={}\n", format_number(r[0]),
                                     format_number(r[1]), format_number(r[2]), format_number(r[4]));
        }
        return 3;
    }
    case Mode::verify: {
        const auto report = run_verify(c);
        const std::string text = report.to_json().dump(2) + "\n";
        if (c.output.empty() || c.output == "-") {
            std::cout << text;
        } else {
            std::ofstream file(c.output);
            if (!file) throw ConfigError(fmt::format("cannot open '{}' for writing", c.output));
            file << text;
        }
        return report.passed() ? 0 : 2;
    }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Complexity of the thermofield double state of a charged particle in a magnetic field"};
    Flags f;
    app.add_option("--mode", f.mode, "time-series | beta-sweep | omega-sweep | lloyd | verify")
        ->check(CLI::IsMember({"time-series", "beta-sweep", "omega-sweep", "lloyd", "verify"}));
    app.add_option("--omega", f.omega, "cyclotron frequency eB/m");
    app.add_option("--omega-ref", f.omega_ref, "reference-state frequency");
    app.add_option("--beta", f.betas, "inverse temperature; 'inf' for T=0, 0 for the high-T limit curve (repeatable)")
        ->allow_extra_args(false);
    app.add_option("--hbar", f.hbar);
    app.add_option("--mass", f.mass);
    app.add_option("--range", f.range, "start:stop:count[:log] of the swept variable");
    app.add_option("--samples", f.samples, "time samples per period (time-series, lloyd)");
    app.add_option("--out", f.out, "output path (default stdout)");
    app.add_option("--format", f.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--fock-dim", f.fock_dim, "Fock truncation for verify");
    app.add_option("--config", f.config_file, "JSON config; flags override its fields")->check(CLI::ExistingFile);
    app.add_flag("--print-config", f.print_config, "print the resolved config as JSON and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const SweepConfig config = resolve(f);
        if (f.print_config) {
            std::cout << config.to_json().dump(2) << "\n";
            return 0;
        }
        return run(config);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
