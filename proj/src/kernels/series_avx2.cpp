#include <immintrin.h>

#include <stdexcept>

#include "avx2_math.hpp"
#include "tfdc/kernels/series.hpp"

namespace tfdc::kernels {
namespace {

struct Branch {
    __m256d h;  // arccosh(1 + u)
    __m256d g;  // h / sqrt(u(u+2)), series below the threshold
};

inline __m256d clamp_roundoff(__m256d u)
{
    const __m256d zero = _mm256_setzero_pd();
    const __m256d tiny_negative =
        _mm256_and_pd(_mm256_cmp_pd(u, zero, _CMP_LT_OQ), _mm256_cmp_pd(u, _mm256_set1_pd(-1e-14), _CMP_GT_OQ));
    return _mm256_blendv_pd(u, zero, tiny_negative);
}

inline Branch arccosh_branch(__m256d u)
{
    const __m256d s = _mm256_sqrt_pd(_mm256_mul_pd(u, _mm256_add_pd(u, _mm256_set1_pd(2.0))));
    const __m256d h = avx2::vlog1p(_mm256_add_pd(u, s));
    const __m256d exact = _mm256_div_pd(h, s);
    const __m256d series = _mm256_sub_pd(_mm256_set1_pd(1.0), _mm256_div_pd(u, _mm256_set1_pd(3.0)));
    const __m256d small = _mm256_cmp_pd(u, _mm256_set1_pd(kSeriesThreshold), _CMP_LT_OQ);
    return {h, _mm256_blendv_pd(exact, series, small)};
}

}  // namespace

void complexity_series_avx2(const SeriesCoefficients& c, std::span<const double> times,
                            std::span<double> complexity, std::span<double> rate)
{
    if (complexity.size() != times.size() || (!rate.empty() && rate.size() != times.size()))
        throw std::invalid_argument("complexity_series: output spans must match the time grid");

    const std::size_t n = times.size();
    const std::size_t vec_end = n - n % 4;
    const __m256d omega = _mm256_set1_pd(c.omega);
    const __m256d amo = _mm256_set1_pd(c.a_minus_one);
    const __m256d q = _mm256_set1_pd(c.q);
    const __m256d base = _mm256_set1_pd(c.base);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d q_omega = _mm256_set1_pd(c.q * c.omega);

    for (std::size_t i = 0; i < vec_end; i += 4) {
        const __m256d theta = _mm256_mul_pd(omega, _mm256_loadu_pd(times.data() + i));
        __m256d sn;
        __m256d cs;
        avx2::vsincos(theta, sn, cs);

        const __m256d qc = _mm256_mul_pd(q, cs);
        const Branch plus = arccosh_branch(clamp_roundoff(_mm256_add_pd(amo, qc)));
        const Branch minus = arccosh_branch(clamp_roundoff(_mm256_sub_pd(amo, qc)));

        const __m256d h2 = _mm256_add_pd(_mm256_mul_pd(plus.h, plus.h), _mm256_mul_pd(minus.h, minus.h));
        const __m256d comp = _mm256_sqrt_pd(_mm256_add_pd(base, _mm256_mul_pd(half, h2)));
        _mm256_storeu_pd(complexity.data() + i, comp);

        if (!rate.empty()) {
            const __m256d adot = _mm256_mul_pd(q_omega, sn);
            const __m256d num = _mm256_mul_pd(adot, _mm256_sub_pd(minus.g, plus.g));
            _mm256_storeu_pd(rate.data() + i, _mm256_div_pd(num, _mm256_add_pd(comp, comp)));
        }
    }
    for (std::size_t i = vec_end; i < n; ++i) {
        const auto p = evaluate_point(c, times[i]);
        complexity[i] = p.complexity;
        if (!rate.empty()) rate[i] = p.rate;
    }
}

}  // namespace tfdc::kernels
