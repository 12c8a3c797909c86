#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "tfdc/kernels/series.hpp"

namespace tfdc::kernels {

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "?";
}

Isa detect_isa()
{
#if defined(TFDC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool has_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (has_avx2) return Isa::avx2;
#endif
    return Isa::scalar;
}

Isa active_isa()
{
    if (const char* forced = std::getenv("TFDC_ISA"); forced != nullptr && std::string(forced) == "scalar")
        return Isa::scalar;
    return detect_isa();
}

void complexity_series(Isa isa, const SeriesCoefficients& c, std::span<const double> times,
                       std::span<double> complexity, std::span<double> rate)
{
#if defined(TFDC_HAVE_AVX2)
    if (isa == Isa::avx2 && detect_isa() == Isa::avx2) {
        const bool in_range = std::all_of(times.begin(), times.end(), [&](double t) {
            return std::abs(c.omega * t) <= kMaxVectorPhase;
        });
        if (in_range) {
            complexity_series_avx2(c, times, complexity, rate);
            return;
        }
    }
#else
    (void)isa;
#endif
    complexity_series_scalar(c, times, complexity, rate);
}

void complexity_series(const SeriesCoefficients& c, std::span<const double> times, std::span<double> complexity,
                       std::span<double> rate)
{
    complexity_series(active_isa(), c, times, complexity, rate);
}

}  // namespace tfdc::kernels
