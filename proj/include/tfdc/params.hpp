#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tfdc {

/// Zero temperature. Stored as IEEE +inf so that exact zero-temperature
/// identities (sinh 2α = 0, e^{-βħω} = 0) hold without a large-float proxy.
inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

/// Physical inputs shared by every evaluation.
///
/// Defaults follow the time-series figure setup: ħ = m = 1, ω_R = 1,
/// ω = 0.1, zero temperature.
struct PhysicalParams {
    double hbar = 1.0;
    double mass = 1.0;
    double omega = 0.1;      ///< cyclotron frequency eB/m
    double omega_ref = 1.0;  ///< reference-state frequency ω_R
    double beta = kInfiniteBeta;

    [[nodiscard]] bool zero_temperature() const noexcept { return std::isinf(beta) && beta > 0; }

    /// βħω, +inf at zero temperature.
    [[nodiscard]] double beta_hbar_omega() const noexcept
    {
        return zero_temperature() ? kInfiniteBeta : beta * hbar * omega;
    }

    /// Period of the complexity, π/ω.
    [[nodiscard]] double period() const noexcept { return M_PI / omega; }

    void validate() const
    {
        auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
        if (!positive(hbar)) throw std::domain_error("hbar must be finite and > 0");
        if (!positive(mass)) throw std::domain_error("mass must be finite and > 0");
        if (!positive(omega)) throw std::domain_error("omega must be finite and > 0");
        if (!positive(omega_ref)) throw std::domain_error("omega_ref must be finite and > 0");
        if (!(zero_temperature() || positive(beta)))
            throw std::domain_error("beta must be > 0 (or inf for zero temperature)");
    }

    /// Copy with βħω set to `bw` (ħ and ω untouched).
    [[nodiscard]] PhysicalParams with_beta_hbar_omega(double bw) const
    {
        PhysicalParams p = *this;
        p.beta = std::isinf(bw) ? kInfiniteBeta : bw / (hbar * omega);
        return p;
    }

    bool operator==(const PhysicalParams&) const = default;
};

/// Parses "inf" (any case) or a decimal literal.
double parse_beta(const std::string& token);

}  // namespace tfdc
