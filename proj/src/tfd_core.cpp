#include "tfdc/tfd_core.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tfdc/kernels/series.hpp"

namespace tfdc::core {
namespace {

const double kLn6 = std::log(6.0);

double sq(double v) { return v * v; }

// Golden-section search for the maximum of f on [lo, hi].
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    const double t = 0.5 * (lo + hi);
    return {t, f(t)};
}

}  // namespace

TfdParams alpha_of(const PhysicalParams& params)
{
    params.validate();
    TfdParams out;
    if (params.zero_temperature()) return out;

    const double bw = params.beta_hbar_omega();
    const double x = std::exp(-0.5 * bw);
    const double one_minus_x2 = -std::expm1(-bw);     // 1 − x²
    const double one_minus_x = -std::expm1(-0.5 * bw);  // 1 − x
    out.tanh_a = x;
    out.alpha = 0.5 * (std::log1p(x) - std::log(one_minus_x));
    out.cosh2a = (1.0 + x * x) / one_minus_x2;
    out.sinh2a = 2.0 * x / one_minus_x2;
    out.cosh2a_minus_one = 2.0 * x * x / one_minus_x2;
    return out;
}

LimitValue partition_function(const PhysicalParams& params)
{
    params.validate();
    if (params.zero_temperature()) return {0.0, true};
    return {1.0 / (4.0 * std::sinh(0.5 * params.beta_hbar_omega())), false};
}

double internal_energy(const PhysicalParams& params)
{
    params.validate();
    const double half = 0.5 * params.hbar * params.omega;
    if (params.zero_temperature()) return half;
    return half / std::tanh(0.5 * params.beta_hbar_omega());
}

Eigen::Matrix<double, 8, 8> CovarianceMatrix::full() const
{
    Eigen::Matrix<double, 8, 8> g = Eigen::Matrix<double, 8, 8>::Zero();
    g.block<2, 2>(0, 0) = block_1p;
    g.block<2, 2>(2, 2) = block_1m;
    g.block<2, 2>(4, 4) = block_2;
    g.block<2, 2>(6, 6) = block_2;
    return g;
}

Block CovarianceMatrix::symplectic()
{
    Block o;
    o << 0.0, 1.0, -1.0, 0.0;
    return o;
}

Block vacuum_block(double mass, double omega)
{
    Block g;
    g << 1.0 / (mass * omega), 0.0, 0.0, mass * omega;
    return g;
}

CovarianceMatrix covariance_g(double t, const PhysicalParams& params)
{
    const auto tfd = alpha_of(params);
    const double mw = params.mass * params.omega;
    const double c = std::cos(params.omega * t);
    const double s = std::sin(params.omega * t);

    CovarianceMatrix g;
    g.time = t;
    for (int sign : {+1, -1}) {
        Block b;
        const double off = -sign * tfd.sinh2a * s;
        b << (tfd.cosh2a + sign * tfd.sinh2a * c) / mw, off, off, mw * (tfd.cosh2a - sign * tfd.sinh2a * c);
        (sign > 0 ? g.block_1p : g.block_1m) = b;
    }
    g.block_2 = vacuum_block(params.mass, params.omega) / 6.0;
    return g;
}

RelativeSpectrum relative_spectrum(double t, const PhysicalParams& params)
{
    const auto coeff = kernels::SeriesCoefficients::from(params);
    const double c = std::cos(params.omega * t);

    RelativeSpectrum out;
    out.time = t;
    auto larger_root = [](double u) {
        if (u < 0.0 && u > -1e-14) u = 0.0;
        return 1.0 + u + std::sqrt(u * (u + 2.0));
    };
    const double u_plus = coeff.a_minus_one + coeff.q * c;
    const double u_minus = coeff.a_minus_one - coeff.q * c;
    out.a_plus = 1.0 + u_plus;
    out.a_minus = 1.0 + u_minus;
    out.e[1] = larger_root(u_plus);
    out.e[0] = 1.0 / out.e[1];
    out.e[3] = larger_root(u_minus);
    out.e[2] = 1.0 / out.e[3];
    out.e[4] = out.e[6] = params.omega_ref / (6.0 * params.omega);
    out.e[5] = out.e[7] = params.omega / (6.0 * params.omega_ref);
    return out;
}

double complexity(double t, const PhysicalParams& params)
{
    return kernels::evaluate_point(kernels::SeriesCoefficients::from(params), t).complexity;
}

double complexity_rate(double t, const PhysicalParams& params)
{
    return kernels::evaluate_point(kernels::SeriesCoefficients::from(params), t).rate;
}

double high_T_rate_limit(double t, double omega, double omega_ref)
{
    if (!(omega > 0.0) || !(omega_ref > 0.0)) throw std::domain_error("high_T_rate_limit: frequencies must be > 0");
    const double sum = sq(omega_ref) + sq(omega);
    const double diff = sq(omega_ref) - sq(omega);
    const double c = std::cos(omega * t);
    return 0.5 * omega * sq(diff) * std::sin(2.0 * omega * t) / (sq(sum) - sq(diff) * sq(c));
}

double oscillation_amplitude(const PhysicalParams& params)
{
    const auto coeff = kernels::SeriesCoefficients::from(params);
    const double half_period = 0.5 * params.period();
    return kernels::evaluate_point(coeff, half_period).complexity - kernels::evaluate_point(coeff, 0.0).complexity;
}

double high_T_amplitude_limit(double omega, double omega_ref)
{
    return std::log((sq(omega_ref) + sq(omega)) / (2.0 * omega_ref * omega));
}

double low_T_sin_coefficient(double omega, double omega_ref)
{
    // (r²+1)/(r²−1)·ln r = L·coth L with L = ln r
    const double l = std::log(omega_ref / omega);
    if (std::abs(l) < 1e-8) return 1.0 + l * l / 3.0;
    return l / std::tanh(l);
}

double zero_temperature_complexity(double omega, double omega_ref)
{
    return std::sqrt(sq(kLn6) + 2.0 * sq(std::log(omega_ref / omega)));
}

std::string_view regime_name(ComplexityRegime r)
{
    switch (r) {
    case ComplexityRegime::low_T: return "low_T";
    case ComplexityRegime::high_T: return "high_T";
    case ComplexityRegime::equal_freq_low_T: return "equal_freq_low_T";
    case ComplexityRegime::equal_freq_high_T: return "equal_freq_high_T";
    case ComplexityRegime::high_freq: return "high_freq";
    case ComplexityRegime::low_freq: return "low_freq";
    }
    return "?";
}

std::string_view regime_name(AmplitudeRegime r)
{
    switch (r) {
    case AmplitudeRegime::low_T: return "low_T";
    case AmplitudeRegime::high_T: return "high_T";
    case AmplitudeRegime::high_freq: return "high_freq";
    }
    return "?";
}

AsymptoticValue asymptotic_complexity(ComplexityRegime regime, double t, const PhysicalParams& params)
{
    params.validate();
    const double w = params.omega;
    const double wr = params.omega_ref;
    const double bw = params.beta_hbar_omega();
    const double delta = w / wr;
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    const bool equal = std::abs(wr - w) <= 1e-12 * w;

    switch (regime) {
    case ComplexityRegime::low_T: {
        const double c0 = zero_temperature_complexity(w, wr);
        const double k = low_T_sin_coefficient(w, wr);
        return {c0 + 2.0 * std::exp(-bw) / c0 * (sq(c) + k * sq(s)), bw > 1.0};
    }
    case ComplexityRegime::high_T: {
        const double root = std::sqrt(sq(sq(wr) + sq(w)) - sq(sq(wr) - sq(w)) * sq(c));
        return {std::log(1.0 / bw) + std::log(2.0 * root / (wr * w)), bw < 1.0};
    }
    case ComplexityRegime::equal_freq_low_T:
        return {kLn6 + 2.0 * std::exp(-bw) / kLn6, bw > 1.0 && equal};
    case ComplexityRegime::equal_freq_high_T: {
        const double l = std::log(4.0 / bw);
        return {l + sq(kLn6) / (2.0 * l), bw < 1.0 && equal};
    }
    case ComplexityRegime::high_freq: {
        const double l = std::log(delta);
        return {std::sqrt(2.0) * l + sq(kLn6) / (2.0 * std::sqrt(2.0) * l), bw > 1.0 && delta > 1.0};
    }
    case ComplexityRegime::low_freq: {
        const double inner = sq(s) + 2.0 * sq(delta) * (1.0 + sq(c));
        return {std::log(1.0 / bw) + std::log(2.0 / delta * std::sqrt(inner)), bw < 1.0 && delta < 1.0};
    }
    }
    throw std::invalid_argument("unknown complexity regime");
}

AsymptoticValue asymptotic_amplitude(AmplitudeRegime regime, const PhysicalParams& params)
{
    params.validate();
    const double w = params.omega;
    const double wr = params.omega_ref;
    const double bw = params.beta_hbar_omega();
    const double delta = w / wr;

    switch (regime) {
    case AmplitudeRegime::low_T: {
        const double c0 = zero_temperature_complexity(w, wr);
        return {2.0 * std::exp(-bw) / c0 * (low_T_sin_coefficient(w, wr) - 1.0), bw > 1.0};
    }
    case AmplitudeRegime::high_T:
        return {high_T_amplitude_limit(w, wr) - sq(std::log(wr / w)) / (2.0 * std::log(1.0 / bw)), bw < 1.0};
    case AmplitudeRegime::high_freq:
        return {std::sqrt(2.0) * std::exp(-bw) * (1.0 - 1.0 / std::log(delta)), bw > 1.0 && delta > 1.0};
    }
    throw std::invalid_argument("unknown amplitude regime");
}

LloydResult lloyd_check(const PhysicalParams& params, int t_samples)
{
    if (t_samples < 8) throw std::invalid_argument("lloyd_check: t_samples must be >= 8");
    const auto coeff = kernels::SeriesCoefficients::from(params);
    const double period = params.period();

    std::vector<double> times(static_cast<std::size_t>(t_samples));
    for (int k = 0; k < t_samples; ++k) times[static_cast<std::size_t>(k)] = period * k / (t_samples - 1);
    std::vector<double> comp(times.size());
    std::vector<double> rate(times.size());
    kernels::complexity_series(coeff, times, comp, rate);

    std::size_t best = 0;
    for (std::size_t k = 1; k < rate.size(); ++k)
        if (std::abs(rate[k]) > std::abs(rate[best])) best = k;

    LloydResult out;
    out.max_rate = std::abs(rate[best]);
    out.argmax_t = times[best];
    if (out.max_rate > 0.0) {
        const double lo = times[best == 0 ? 0 : best - 1];
        const double hi = times[std::min(best + 1, times.size() - 1)];
        auto abs_rate = [&](double t) { return std::abs(kernels::evaluate_point(coeff, t).rate); };
        const auto [t_star, r_star] = golden_max(abs_rate, lo, hi, 1e-10);
        if (r_star > out.max_rate) {
            out.max_rate = r_star;
            out.argmax_t = t_star;
        }
    }
    out.bound = 2.0 * internal_energy(params) / (M_PI * params.hbar);
    out.satisfied = out.max_rate <= out.bound;
    return out;
}

}  // namespace tfdc::core
