#include "tfdc/laguerre.hpp"

#include <array>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "tfdc/quadrature.hpp"

namespace tfdc::quantization {
namespace {

constexpr double kRhoMin = 1e-3;
constexpr double kRhoMax = 12.0;
constexpr int kRhoPoints = 2000;
constexpr int kPhiPoints = 128;

using cd = std::complex<double>;

// ρ^p e^{-ρ²/2}, exact zero limits at ρ = 0.
double radial_envelope(int power, double rho)
{
    if (rho == 0.0) return power == 0 ? 1.0 : 0.0;
    return std::exp(power * std::log(rho) - 0.5 * rho * rho);
}

// Samples of a state on the (ρ, φ) finite-difference grid, row-major in ρ.
struct Grid {
    double h_rho = (kRhoMax - kRhoMin) / (kRhoPoints - 1);
    double h_phi = 2.0 * M_PI / kPhiPoints;

    [[nodiscard]] double rho(int i) const { return kRhoMin + i * h_rho; }
    [[nodiscard]] double phi(int j) const { return j * h_phi; }
    [[nodiscard]] static std::size_t index(int i, int j)
    {
        return static_cast<std::size_t>(i) * kPhiPoints + static_cast<std::size_t>(j);
    }

    [[nodiscard]] std::vector<cd> sample(const QuantumNumbers& q, const PhysicalParams& params) const
    {
        std::vector<cd> out(static_cast<std::size_t>(kRhoPoints) * kPhiPoints);
        for (int i = 0; i < kRhoPoints; ++i)
            for (int j = 0; j < kPhiPoints; ++j) out[index(i, j)] = wavefunction(q, rho(i), phi(j), params);
        return out;
    }

    // 4th-order central differences, one-sided 5-point stencils at the two
    // outermost points of each end.
    [[nodiscard]] std::vector<cd> d_rho(const std::vector<cd>& f) const
    {
        std::vector<cd> out(f.size());
        const double s = 1.0 / (12.0 * h_rho);
        const int last = kRhoPoints - 1;
        for (int j = 0; j < kPhiPoints; ++j) {
            auto at = [&](int i) { return f[index(i, j)]; };
            out[index(0, j)] = s * (-25.0 * at(0) + 48.0 * at(1) - 36.0 * at(2) + 16.0 * at(3) - 3.0 * at(4));
            out[index(1, j)] = s * (-3.0 * at(0) - 10.0 * at(1) + 18.0 * at(2) - 6.0 * at(3) + at(4));
            for (int i = 2; i <= last - 2; ++i)
                out[index(i, j)] = s * (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2));
            out[index(last - 1, j)] =
                -s * (-3.0 * at(last) - 10.0 * at(last - 1) + 18.0 * at(last - 2) - 6.0 * at(last - 3) + at(last - 4));
            out[index(last, j)] = -s * (-25.0 * at(last) + 48.0 * at(last - 1) - 36.0 * at(last - 2) +
                                        16.0 * at(last - 3) - 3.0 * at(last - 4));
        }
        return out;
    }

    [[nodiscard]] std::vector<cd> d_phi(const std::vector<cd>& f) const
    {
        std::vector<cd> out(f.size());
        const double s = 1.0 / (12.0 * h_phi);
        auto wrap = [](int j) { return (j + kPhiPoints) % kPhiPoints; };
        for (int i = 0; i < kRhoPoints; ++i)
            for (int j = 0; j < kPhiPoints; ++j) {
                auto at = [&](int jj) { return f[index(i, wrap(jj))]; };
                out[index(i, j)] = s * (at(j - 2) - 8.0 * at(j - 1) + 8.0 * at(j + 1) - at(j + 2));
            }
        return out;
    }

    // λ² ∫∫ conj(u) v ρ dρ dφ: composite Simpson in ρ (trapezoid on the
    // final interval, where both states are ~e^{-144}), trapezoid in φ.
    [[nodiscard]] cd inner(const std::vector<cd>& u, const std::vector<cd>& v, double lambda) const
    {
        cd total{};
        for (int i = 0; i < kRhoPoints; ++i) {
            double w;
            if (i == kRhoPoints - 1)
                w = 0.5 * h_rho;
            else if (i == kRhoPoints - 2)
                w = h_rho / 3.0 + 0.5 * h_rho;
            else if (i == 0)
                w = h_rho / 3.0;
            else
                w = (i % 2 == 1 ? 4.0 : 2.0) * h_rho / 3.0;
            cd row{};
            for (int j = 0; j < kPhiPoints; ++j) row += std::conj(u[index(i, j)]) * v[index(i, j)];
            total += w * rho(i) * row;
        }
        return total * h_phi * lambda * lambda;
    }
};

}  // namespace

double laguerre(int n, int ell, double r)
{
    if (n < 0) throw std::domain_error("laguerre: n must be >= 0");
    if (ell < 0) throw std::domain_error("laguerre: superscript ell must be >= 0");
    if (!(r >= 0.0)) throw std::domain_error("laguerre: argument r must be >= 0");

    double prev = 1.0;
    if (n == 0) return prev;
    double curr = 1.0 + ell - r;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + ell - r) * curr - (k + ell) * prev) / (k + 1.0);
        prev = curr;
        curr = next;
    }
    return curr;
}

double energy(int n, const PhysicalParams& params)
{
    if (n < 0) throw std::domain_error("energy: n must be >= 0");
    if (!(params.omega > 0.0) || !(params.hbar > 0.0)) throw std::domain_error("energy: hbar and omega must be > 0");
    return params.hbar * params.omega * (n + 0.5);
}

double length_scale(const PhysicalParams& params)
{
    return std::sqrt(2.0 * params.hbar / (params.mass * params.omega));
}

std::complex<double> wavefunction(const QuantumNumbers& q, double rho, double phi, const PhysicalParams& params)
{
    if (!(rho >= 0.0)) throw std::domain_error("wavefunction: rho must be >= 0");
    const int n = q.n();
    const int ell = q.ell();
    const double lambda = length_scale(params);
    const cd phase = std::polar(1.0, ell * phi);
    const double r = rho * rho;

    if (ell >= 0) {
        const double norm = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + ell + 1.0) - std::log(M_PI)));
        return phase * (norm / lambda * radial_envelope(ell, rho) * laguerre(n, ell, r));
    }
    // L_n^{(-k)}(x) = (-x)^k (n-k)!/n! L_{n-k}^{(k)}(x), k = |ℓ| ≤ n
    const int k = -ell;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double norm = std::exp(0.5 * (std::lgamma(n - k + 1.0) - std::lgamma(n + 1.0) - std::log(M_PI)));
    return phase * (sign * norm / lambda * radial_envelope(k, rho) * laguerre(n - k, k, r));
}

WavefunctionSample sample_wavefunction(const QuantumNumbers& q, double rho, double phi, const PhysicalParams& params)
{
    return {rho, phi, wavefunction(q, rho, phi, params), length_scale(params)};
}

double laguerre_norm_integral(int n, int m, int ell)
{
    if (n < 0 || m < 0 || ell < 0) throw std::domain_error("laguerre_norm_integral: arguments must be >= 0");
    const auto rule = quadrature::gauss_laguerre_for_degree(static_cast<std::size_t>(n + m + ell));
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = rule.nodes[i];
        sum += rule.weights[i] * std::pow(r, ell) * laguerre(n, ell, r) * laguerre(m, ell, r);
    }
    return sum;
}

double laguerre_norm_expected(int n, int m, int ell)
{
    if (n != m) return 0.0;
    return std::exp(std::lgamma(n + ell + 1.0) - std::lgamma(n + 1.0));
}

LadderCheck ladder_action_check(const QuantumNumbers& q, Ladder which, const PhysicalParams& params)
{
    const int n = q.n();
    const int ell = q.ell();
    LadderCheck out;
    switch (which) {
    case Ladder::a:
        if (n == 0) {
            out.annihilates = true;
            return out;
        }
        out.target = QuantumNumbers(n - 1, ell + 1);
        break;
    case Ladder::a_dagger:
        out.target = QuantumNumbers(n + 1, ell - 1);
        break;
    case Ladder::b:
        if (q.k() == 0) {
            out.annihilates = true;
            return out;
        }
        out.target = QuantumNumbers(n, ell - 1);
        break;
    case Ladder::b_dagger:
        out.target = QuantumNumbers(n, ell + 1);
        break;
    }

    const Grid grid;
    const auto psi = grid.sample(q, params);
    const auto target = grid.sample(out.target, params);
    const auto dr = grid.d_rho(psi);
    const auto dp = grid.d_phi(psi);

    // a  = -e^{iφ}/2  (ρ + ∂ρ + (i/ρ)∂φ)     a† = -e^{-iφ}/2 (ρ − ∂ρ + (i/ρ)∂φ)
    // b  =  e^{-iφ}/2 (ρ + ∂ρ − (i/ρ)∂φ)     b† =  e^{iφ}/2  (ρ − ∂ρ − (i/ρ)∂φ)
    double pref = 0.0;
    int phase_sign = 0;
    double d_sign = 0.0;
    double phi_sign = 0.0;
    switch (which) {
    case Ladder::a: pref = -0.5; phase_sign = +1; d_sign = +1.0; phi_sign = +1.0; break;
    case Ladder::a_dagger: pref = -0.5; phase_sign = -1; d_sign = -1.0; phi_sign = +1.0; break;
    case Ladder::b: pref = 0.5; phase_sign = -1; d_sign = +1.0; phi_sign = -1.0; break;
    case Ladder::b_dagger: pref = 0.5; phase_sign = +1; d_sign = -1.0; phi_sign = -1.0; break;
    }

    std::vector<cd> applied(psi.size());
    const cd i_unit{0.0, 1.0};
    for (int i = 0; i < kRhoPoints; ++i) {
        const double rho = grid.rho(i);
        for (int j = 0; j < kPhiPoints; ++j) {
            const auto idx = Grid::index(i, j);
            const cd bracket = rho * psi[idx] + d_sign * dr[idx] + phi_sign * i_unit / rho * dp[idx];
            applied[idx] = pref * std::polar(1.0, phase_sign * grid.phi(j)) * bracket;
        }
    }
    out.coefficient = grid.inner(target, applied, length_scale(params)).real();
    return out;
}

double angular_momentum_expectation(const QuantumNumbers& q, const PhysicalParams& params)
{
    const Grid grid;
    const auto psi = grid.sample(q, params);
    auto lz = grid.d_phi(psi);
    const cd factor{0.0, -params.hbar};
    for (auto& v : lz) v *= factor;
    const double lambda = length_scale(params);
    return (grid.inner(psi, lz, lambda) / grid.inner(psi, psi, lambda)).real();
}

double gram_deviation(int max_level, const PhysicalParams& params)
{
    if (max_level < 0) throw std::domain_error("gram_deviation: max_level must be >= 0");
    std::vector<QuantumNumbers> states;
    for (int n = 0; n <= max_level; ++n)
        for (int ell = -n; n + std::abs(ell) <= max_level; ++ell) states.emplace_back(n, ell);

    // In r = ρ² the radial integrand is r^{|ℓ|} e^{-r} × (degree ≤ 2·max_level polynomial).
    const auto rule = quadrature::gauss_laguerre_for_degree(static_cast<std::size_t>(4 * max_level + 2));
    const int phi_points = 4 * max_level + 8;  // exact for |ℓ − ℓ'| ≤ 2·max_level
    const double lambda = length_scale(params);
    const double h_phi = 2.0 * M_PI / phi_points;

    const std::size_t ns = states.size();
    const std::size_t nr = rule.nodes.size();
    std::vector<cd> samples(ns * nr * static_cast<std::size_t>(phi_points));
    auto at = [&](std::size_t s, std::size_t i, int j) -> cd& {
        return samples[(s * nr + i) * static_cast<std::size_t>(phi_points) + static_cast<std::size_t>(j)];
    };
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t i = 0; i < nr; ++i)
            for (int j = 0; j < phi_points; ++j)
                at(s, i, j) = wavefunction(states[s], std::sqrt(rule.nodes[i]), j * h_phi, params);

    double worst = 0.0;
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t u = s; u < ns; ++u) {
            cd total{};
            for (std::size_t i = 0; i < nr; ++i) {
                // ρ dρ = dr/2, e^{-r} absorbed into the weight.
                const double w = rule.weights[i] * std::exp(rule.nodes[i]) * 0.5 * h_phi;
                cd row{};
                for (int j = 0; j < phi_points; ++j) row += std::conj(at(s, i, j)) * at(u, i, j);
                total += w * row;
            }
            total *= lambda * lambda;
            const double expected = (s == u) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(total - expected));
        }
    return worst;
}

}  // namespace tfdc::quantization
