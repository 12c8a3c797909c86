#pragma once

// Complexity and complexity-rate time series.
//
// Every sweep and the Lloyd maximization evaluate 𝒞(t) and Ċ(t) on long
// time grids at fixed parameters. The per-sample work reduces to
//
//   u± = (A± − 1) = a_minus_one ± q·cos ωt
//   h± = arccosh(1 + u±) = log1p(u± + sqrt(u±(u± + 2)))
//   𝒞  = sqrt(base + (h₊² + h₋²)/2)
//   Ċ  = (Ȧ₊ g(u₊) + Ȧ₋ g(u₋)) / (2𝒞),  Ȧ± = ∓ q ω sin ωt,
//   g(u) = h/sqrt(u(u+2))  (→ 1 − u/3 below u = 1e-8)
//
// The scalar kernel is the reference; the AVX2 kernel must agree with it to
// a few ulps and is selected at runtime when the CPU supports AVX2+FMA.

#include <span>
#include <string_view>

#include "tfdc/params.hpp"

namespace tfdc::kernels {

/// Below this u = A − 1 the removable singularity of g(u) is evaluated by
/// its two-term series.
inline constexpr double kSeriesThreshold = 1e-8;

/// |ωt| above which the AVX2 argument reduction is not trusted; the
/// dispatcher routes such inputs to the scalar kernel.
inline constexpr double kMaxVectorPhase = 268435456.0;  // 2^28

/// Per-parameter constants, computed once per series.
struct SeriesCoefficients {
    double omega = 0.0;
    double base = 0.0;         ///< ln²6 + ln²(ω_R/ω)
    double a_minus_one = 0.0;  ///< [(ω_R²+ω²)cosh2α − 2ω_Rω]/(2ω_Rω), cancellation-free
    double q = 0.0;            ///< (ω_R²−ω²) sinh2α/(2ω_Rω)

    static SeriesCoefficients from(const PhysicalParams& params);
};

struct SeriesPoint {
    double complexity;
    double rate;
};

/// arccosh(1+u)/sqrt(u(u+2)), with the series branch near u = 0.
double arccosh_ratio(double u);

/// Scalar reference for one sample.
SeriesPoint evaluate_point(const SeriesCoefficients& c, double t);

/// `complexity` and `rate` must have the size of `times`; `rate` may be empty
/// to skip the derivative.
void complexity_series_scalar(const SeriesCoefficients& c, std::span<const double> times,
                              std::span<double> complexity, std::span<double> rate);

#if defined(TFDC_HAVE_AVX2)
void complexity_series_avx2(const SeriesCoefficients& c, std::span<const double> times,
                            std::span<double> complexity, std::span<double> rate);
#endif

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best ISA compiled in and supported by this CPU.
Isa detect_isa();

/// detect_isa(), unless TFDC_ISA=scalar forces the reference path.
Isa active_isa();

void complexity_series(Isa isa, const SeriesCoefficients& c, std::span<const double> times,
                       std::span<double> complexity, std::span<double> rate);

/// Runs on active_isa().
void complexity_series(const SeriesCoefficients& c, std::span<const double> times, std::span<double> complexity,
                       std::span<double> rate);

}  // namespace tfdc::kernels
