#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "tfdc/fock_oracle.hpp"
#include "tfdc/kernels/series.hpp"
#include "tfdc/laguerre.hpp"
#include "tfdc/sweep.hpp"
#include "tfdc/tfd_core.hpp"

namespace tfdc::sweep {
namespace {

namespace q = quantization;

void laguerre_suites(OracleReport& report, const PhysicalParams& params)
{
    double worst = 0.0;
    for (int ell = 0; ell <= 4; ++ell)
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; m <= 6; ++m) {
                const double scale = std::sqrt(q::laguerre_norm_expected(n, n, ell) * q::laguerre_norm_expected(m, m, ell));
                const double dev = std::abs(q::laguerre_norm_integral(n, m, ell) - q::laguerre_norm_expected(n, m, ell));
                worst = std::max(worst, dev / scale);
            }
    report.add("laguerre orthogonality", worst, 1e-9);
    report.add("wavefunction gram n+|l|<=4", q::gram_deviation(4, params), 1e-8);

    double ladder = 0.0;
    for (int n = 0; n <= 2; ++n)
        for (int ell = -n; ell <= 2; ++ell) {
            const q::QuantumNumbers state(n, ell);
            const std::array<std::pair<q::Ladder, double>, 4> ops{{
                {q::Ladder::a, std::sqrt(double(n))},
                {q::Ladder::a_dagger, std::sqrt(n + 1.0)},
                {q::Ladder::b, std::sqrt(double(state.k()))},
                {q::Ladder::b_dagger, std::sqrt(state.k() + 1.0)},
            }};
            for (const auto& [op, expected] : ops) {
                const auto r = q::ladder_action_check(state, op, params);
                ladder = std::max(ladder, std::abs(r.coefficient - expected));
            }
        }
    report.add("ladder coefficients", ladder, 1e-4);
}

void covariance_suite(OracleReport& report, const PhysicalParams& base, int dim)
{
    double worst = 0.0;
    std::vector<std::string> warnings;
    for (double bw : {1.0, 2.0, 4.0}) {
        const auto p = base.with_beta_hbar_omega(bw);
        for (int k = 0; k <= 8; ++k) {
            const double t = k * p.period() / 8.0;
            const auto oracle = fock::oracle_covariance_1pm(t, p, dim);
            const auto closed = core::covariance_g(t, p);
            worst = std::max({worst, (oracle.plus - closed.block_1p).cwiseAbs().maxCoeff(),
                              (oracle.minus - closed.block_1m).cwiseAbs().maxCoeff()});
            for (const auto& w : oracle.warnings)
                if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
        }
    }
    report.add(fmt::format("fock covariance N={}", dim), worst, 1e-8);
    for (auto& w : warnings) report.warn(std::move(w));
}

double fd_rate(double t, double h, const PhysicalParams& p)
{
    const auto c = [&](double s) { return core::complexity(s, p); };
    return (c(t - 2 * h) - 8 * c(t - h) + 8 * c(t + h) - c(t + 2 * h)) / (12 * h);
}

void rate_suite(OracleReport& report, const PhysicalParams& base)
{
    double worst = 0.0;
    for (double omega : {0.1, 0.5, 2.0, 5.0})
        for (double bw : {0.01, 0.1, 1.0, 2.0, 5.0}) {
            PhysicalParams p = base;
            p.omega = omega;
            p = p.with_beta_hbar_omega(bw);
            for (double frac : {0.1, 0.23, 0.37, 0.61, 0.83}) {
                const double t = frac * p.period();
                const double fd = fd_rate(t, 1e-5 * p.period(), p);
                const double exact = core::complexity_rate(t, p);
                worst = std::max(worst, std::abs(exact - fd) / std::abs(fd));
            }
        }
    report.add("rate vs finite differences", worst, 1e-6);
}

void kernel_suite(OracleReport& report, const PhysicalParams& base)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (double bw : {1e-4, 0.1, 1.0, 10.0, 40.0}) {
        const auto p = base.with_beta_hbar_omega(bw);
        std::vector<double> times(1027);
        for (auto& t : times) t = 4.0 * p.period() * unit(rng);
        const auto c = kernels::SeriesCoefficients::from(p);
        std::vector<double> c0(times.size()), r0(times.size()), c1(times.size()), r1(times.size());
        kernels::complexity_series(kernels::Isa::scalar, c, times, c0, r0);
        kernels::complexity_series(kernels::active_isa(), c, times, c1, r1);
        for (std::size_t i = 0; i < times.size(); ++i) {
            worst = std::max(worst, std::abs(c1[i] - c0[i]) / std::abs(c0[i]));
            const double rs = std::max(std::abs(r0[i]), 1e-300 + std::abs(c.q * c.omega));
            worst = std::max(worst, std::abs(r1[i] - r0[i]) / rs);
        }
    }
    report.add(fmt::format("kernel {} vs scalar", kernels::isa_name(kernels::active_isa())), worst, 1e-12);
}

}  // namespace

OracleReport run_verify(const SweepConfig& config)
{
    if (config.mode != Mode::verify) throw ConfigError("run_verify needs mode verify");
    config.validate();
    PhysicalParams p = config.params;
    p.beta = kInfiniteBeta;

    OracleReport report;
    laguerre_suites(report, p);
    for (auto& s : fock::commutator_report(config.fock_dim).suites) report.suites.push_back(std::move(s));
    covariance_suite(report, p, config.fock_dim);
    rate_suite(report, p);
    kernel_suite(report, p);
    return report;
}

}  // namespace tfdc::sweep
