#include "tfdc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "tfdc/kernels/series.hpp"
#include "tfdc/tfd_core.hpp"

namespace tfdc::sweep {
namespace {

// Runs f(i) for i in [0, n) on the thread budget. Results are written by
// index, so output order never depends on scheduling.
template <class F>
void parallel_for(std::size_t n, F&& f)
{
    const std::size_t workers = std::min<std::size_t>(thread_budget(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        f(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
    }
    if (failure) std::rethrow_exception(failure);
}

std::string join_betas(const std::vector<double>& betas)
{
    std::string out;
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (i) out += ',';
        out += format_number(betas[i]);
    }
    return out;
}

void echo_config(SweepTable& table, const SweepConfig& config)
{
    const auto& p = config.params;
    table.metadata.emplace_back("mode", std::string(mode_name(config.mode)));
    table.metadata.emplace_back("hbar", format_number(p.hbar));
    table.metadata.emplace_back("mass", format_number(p.mass));
    table.metadata.emplace_back("omega", config.mode == Mode::omega_sweep ? "swept" : format_number(p.omega));
    table.metadata.emplace_back("omega_ref", format_number(p.omega_ref));
    if (config.mode == Mode::time_series)
        table.metadata.emplace_back("beta", join_betas(config.betas));
    else if (config.mode == Mode::beta_sweep || config.mode == Mode::lloyd)
        table.metadata.emplace_back("beta", "swept");
    else
        table.metadata.emplace_back("beta", format_number(p.beta));
    table.metadata.emplace_back("range", config.resolved_range().to_string());
    if (config.resolved_samples() > 0)
        table.metadata.emplace_back("samples", std::to_string(config.resolved_samples()));
    table.metadata.emplace_back("isa", std::string(kernels::isa_name(kernels::active_isa())));
    std::string units;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) units += ',';
        units += table.columns[i].name + ":" + table.columns[i].unit;
    }
    table.metadata.emplace_back("units", units);
}

}  // namespace

unsigned thread_budget()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("TFD_SEED_THREADS"); cap != nullptr) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end != cap && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

std::size_t SweepTable::column_index(std::string_view name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return i;
    throw std::out_of_range(fmt::format("no column named '{}'", name));
}

std::vector<double> SweepTable::column(std::string_view name) const
{
    const auto idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[idx]);
    return out;
}

void SweepTable::add_row(std::vector<double> row)
{
    if (row.size() != columns.size())
        throw std::logic_error(fmt::format("row arity {} != column count {}", row.size(), columns.size()));
    rows.push_back(std::move(row));
}

SweepTable run_time_series(const SweepConfig& config)
{
    if (config.mode != Mode::time_series) throw ConfigError("run_time_series needs mode time-series");
    config.validate();
    const auto times = config.resolved_range().values();

    SweepTable table;
    table.columns = {{"beta", "1/energy"}, {"t", "time"}, {"complexity", "1"}, {"rate", "1/time"}};
    echo_config(table, config);

    std::vector<std::vector<std::vector<double>>> blocks(config.betas.size());
    parallel_for(config.betas.size(), [&](std::size_t b) {
        const double beta = config.betas[b];
        std::vector<double> comp(times.size());
        std::vector<double> rate(times.size());
        if (beta == 0.0) {
            for (std::size_t i = 0; i < times.size(); ++i) {
                comp[i] = std::numeric_limits<double>::infinity();
                rate[i] = core::high_T_rate_limit(times[i], config.params.omega, config.params.omega_ref);
            }
        } else {
            PhysicalParams p = config.params;
            p.beta = beta;
            kernels::complexity_series(kernels::SeriesCoefficients::from(p), times, comp, rate);
        }
        auto& rows = blocks[b];
        rows.reserve(times.size());
        for (std::size_t i = 0; i < times.size(); ++i) rows.push_back({beta, times[i], comp[i], rate[i]});
    });
    for (auto& block : blocks)
        for (auto& row : block) table.add_row(std::move(row));

    if (std::find(config.betas.begin(), config.betas.end(), 0.0) != config.betas.end())
        table.metadata.emplace_back("limit.beta=0", "complexity diverges (inf); rate is the beta->0 limit");
    return table;
}

SweepTable run_beta_sweep(const SweepConfig& config)
{
    if (config.mode != Mode::beta_sweep) throw ConfigError("run_beta_sweep needs mode beta-sweep");
    config.validate();
    const auto betas = config.resolved_range().values();

    SweepTable table;
    table.columns = {{"beta", "1/energy"}, {"complexity_at_half_period", "1"}, {"amplitude", "1"}};
    echo_config(table, config);

    std::vector<std::vector<double>> rows(betas.size());
    parallel_for(betas.size(), [&](std::size_t i) {
        PhysicalParams p = config.params;
        p.beta = betas[i];
        rows[i] = {betas[i], core::complexity(0.5 * p.period(), p), core::oscillation_amplitude(p)};
    });
    for (auto& r : rows) table.add_row(std::move(r));
    return table;
}

SweepTable run_omega_sweep(const SweepConfig& config)
{
    if (config.mode != Mode::omega_sweep) throw ConfigError("run_omega_sweep needs mode omega-sweep");
    config.validate();
    const auto omegas = config.resolved_range().values();

    SweepTable table;
    table.columns = {{"omega", "1/time"}, {"complexity_at_half_period", "1"}, {"amplitude", "1"}};
    echo_config(table, config);

    std::vector<std::vector<double>> rows(omegas.size());
    parallel_for(omegas.size(), [&](std::size_t i) {
        PhysicalParams p = config.params;
        p.omega = omegas[i];
        rows[i] = {omegas[i], core::complexity(0.5 * p.period(), p), core::oscillation_amplitude(p)};
    });
    for (auto& r : rows) table.add_row(std::move(r));
    return table;
}

SweepTable run_lloyd(const SweepConfig& config)
{
    if (config.mode != Mode::lloyd) throw ConfigError("run_lloyd needs mode lloyd");
    config.validate();
    const auto betas = config.resolved_range().values();
    const int samples = config.resolved_samples();

    SweepTable table;
    table.columns = {{"beta", "1/energy"},
                     {"max_rate", "1/time"},
                     {"bound", "1/time"},
                     {"satisfied", "bool"},
                     {"argmax_t", "time"}};
    echo_config(table, config);

    std::vector<std::vector<double>> rows(betas.size());
    parallel_for(betas.size(), [&](std::size_t i) {
        PhysicalParams p = config.params;
        p.beta = betas[i];
        const auto r = core::lloyd_check(p, samples);
        rows[i] = {betas[i], r.max_rate, r.bound, r.satisfied ? 1.0 : 0.0, r.argmax_t};
    });
    for (auto& r : rows) table.add_row(std::move(r));
    return table;
}

std::vector<std::size_t> lloyd_violations(const SweepTable& table)
{
    const auto satisfied = table.column("satisfied");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < satisfied.size(); ++i)
        if (satisfied[i] == 0.0) out.push_back(i);
    return out;
}

}  // namespace tfdc::sweep
