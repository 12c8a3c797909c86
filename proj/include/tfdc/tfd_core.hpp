#pragma once

// Closed-form engine for the time-dependent thermofield double of a charged
// particle in a uniform magnetic field: squeezing parameter, covariance
// blocks, relative spectrum, Nielsen complexity, its rate, the oscillation
// amplitude, the asymptotic expansions, and the Lloyd-bound comparison.

#include <array>
#include <string_view>

#include <Eigen/Dense>

#include "tfdc/params.hpp"

namespace tfdc::core {

/// tanh α = e^{-βħω/2}. cosh 2α and sinh 2α are filled from x = tanh α as
/// rational functions, never through cosh(2·artanh x).
struct TfdParams {
    double alpha = 0.0;
    double cosh2a = 1.0;
    double sinh2a = 0.0;
    double tanh_a = 0.0;          ///< x = e^{-βħω/2}
    double cosh2a_minus_one = 0.0;  ///< 2x²/(1−x²), no cancellation
};

TfdParams alpha_of(const PhysicalParams& params);

/// A value that may be a limit rather than an evaluation.
struct LimitValue {
    double value;
    bool is_limit;
};

/// Z = 1/(4 sinh(βħω/2)); at β = ∞ returns the limit 0, flagged.
LimitValue partition_function(const PhysicalParams& params);

/// U = (ħω/2) coth(βħω/2); ħω/2 at β = ∞.
double internal_energy(const PhysicalParams& params);

using Block = Eigen::Matrix2d;

/// Second-moment blocks of the 8×8 covariance G(t) in the ξ = (ξ₁₊, ξ₁₋, ξ₂₊, ξ₂₋) ordering.
struct CovarianceMatrix {
    Block block_1p;
    Block block_1m;
    Block block_2;  ///< appears in both ξ₂± slots
    double time = 0.0;

    /// Block-diagonal diag(G̃₁₊, G̃₁₋, G̃₂, G̃₂).
    [[nodiscard]] Eigen::Matrix<double, 8, 8> full() const;

    /// Symplectic form Ω̃₀ shared by every block.
    static Block symplectic();
};

/// G̃₀ = diag(1/(mω), mω) at frequency ω.
Block vacuum_block(double mass, double omega);

CovarianceMatrix covariance_g(double t, const PhysicalParams& params);

/// Eigenvalues of Δ(t) = G(t)·G_R⁻¹ and the A± that generate them.
struct RelativeSpectrum {
    double a_plus = 1.0;
    double a_minus = 1.0;
    std::array<double, 8> e{};
    double time = 0.0;
};

RelativeSpectrum relative_spectrum(double t, const PhysicalParams& params);

/// 𝒞(t) = ½ sqrt(Σ ln² e_s).
double complexity(double t, const PhysicalParams& params);

/// d𝒞/dt by the analytic chain rule.
double complexity_rate(double t, const PhysicalParams& params);

/// β → 0 limit of the rate.
double high_T_rate_limit(double t, double omega, double omega_ref);

/// 𝒞(𝒯/2) − 𝒞(0), 𝒯 = π/ω.
double oscillation_amplitude(const PhysicalParams& params);

/// β → 0 limit of the amplitude, ln((ω_R²+ω²)/(2ω_Rω)).
double high_T_amplitude_limit(double omega, double omega_ref);

/// ((ω_R²+ω²)/(ω_R²−ω²))·ln(ω_R/ω); tends to 1 as ω → ω_R.
double low_T_sin_coefficient(double omega, double omega_ref);

/// 𝒞 at zero temperature, sqrt(ln²6 + 2 ln²(ω_R/ω)).
double zero_temperature_complexity(double omega, double omega_ref);

enum class ComplexityRegime { low_T, high_T, equal_freq_low_T, equal_freq_high_T, high_freq, low_freq };
enum class AmplitudeRegime { low_T, high_T, high_freq };

std::string_view regime_name(ComplexityRegime r);
std::string_view regime_name(AmplitudeRegime r);

/// `regime_ok` is false when the parameters lie outside the expansion's
/// domain; the expression is evaluated regardless.
struct AsymptoticValue {
    double value;
    bool regime_ok;
};

AsymptoticValue asymptotic_complexity(ComplexityRegime regime, double t, const PhysicalParams& params);
AsymptoticValue asymptotic_amplitude(AmplitudeRegime regime, const PhysicalParams& params);

struct LloydResult {
    double max_rate = 0.0;
    double bound = 0.0;
    bool satisfied = true;
    double argmax_t = 0.0;
};

inline constexpr int kDefaultLloydSamples = 257;

/// max |Ċ| over one period (uniform grid + golden-section polish to 1e-10
/// in t) against 2U/(πħ).
LloydResult lloyd_check(const PhysicalParams& params, int t_samples = kDefaultLloydSamples);

}  // namespace tfdc::core
