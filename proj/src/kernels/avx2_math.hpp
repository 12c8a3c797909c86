#pragma once

// Double-precision log and sincos on __m256d, after the Cephes
// polynomial/rational approximations. Compile with -mavx2 -mfma.
//
// vlog assumes finite normal arguments ≥ 1 (the kernel only takes logs of
// 1 + u with u ≥ 0). vsincos assumes |x| ≤ 2^28.

#include <immintrin.h>

namespace tfdc::kernels::avx2 {

inline __m256d polevl5(__m256d x, const double (&c)[6])
{
    __m256d r = _mm256_set1_pd(c[0]);
    for (int i = 1; i < 6; ++i) r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c[i]));
    return r;
}

// Leading coefficient 1.
inline __m256d p1evl5(__m256d x, const double (&c)[5])
{
    __m256d r = _mm256_add_pd(x, _mm256_set1_pd(c[0]));
    for (int i = 1; i < 5; ++i) r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c[i]));
    return r;
}

inline __m256d vlog(__m256d x)
{
    static constexpr double P[6] = {1.01875663804580931796E-4, 4.97494994976747001425E-1,
                                    4.70579119878881725854E0,  1.44989225341610930846E1,
                                    1.79368678507819816313E1,  7.70838733755885391666E0};
    static constexpr double Q[5] = {1.12873587189167450590E1, 4.52279145837532221105E1, 8.29875266912776603211E1,
                                    7.11544750618563894466E1, 2.31251620126765340583E1};

    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i biased = _mm256_srli_epi64(bits, 52);
    const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
    const __m256i half_exp = _mm256_set1_epi64x(0x3fe0000000000000LL);
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_exp));

    // x = m · 2^e with m ∈ [0.5, 1); int64 → double through the 2^52 magic
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
    __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(biased, magic)),
                              _mm256_set1_pd(4503599627370496.0 + 1022.0));

    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d below = _mm256_cmp_pd(m, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
    e = _mm256_sub_pd(e, _mm256_and_pd(below, one));
    m = _mm256_sub_pd(_mm256_blendv_pd(m, _mm256_add_pd(m, m), below), one);

    const __m256d z = _mm256_mul_pd(m, m);
    const __m256d ratio = _mm256_div_pd(polevl5(m, P), p1evl5(m, Q));
    __m256d y = _mm256_mul_pd(m, _mm256_mul_pd(z, ratio));
    y = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679e-4), y);
    y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, y);
    __m256d r = _mm256_add_pd(m, y);
    return _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);
}

/// log(1 + v) for v ≥ 0, with the rounding of 1 + v compensated.
inline __m256d vlog1p(__m256d v)
{
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d y = _mm256_add_pd(one, v);
    const __m256d err = _mm256_sub_pd(_mm256_sub_pd(y, one), v);
    return _mm256_sub_pd(vlog(y), _mm256_div_pd(err, y));
}

inline void vsincos(__m256d x, __m256d& s_out, __m256d& c_out)
{
    static constexpr double S[6] = {1.58962301576546568060E-10, -2.50507477628578072866E-8,
                                    2.75573136213857245213E-6,  -1.98412698295895385996E-4,
                                    8.33333333332211858878E-3,  -1.66666666666666307295E-1};
    static constexpr double C[6] = {-1.13585365213876817300E-11, 2.08757008419747316778E-9,
                                    -2.75573141792967388112E-7,  2.48015872888517045348E-5,
                                    -1.38888888888730564116E-3,  4.16666666666665929218E-2};
    const __m256d sign_bit = _mm256_set1_pd(-0.0);
    const __m256d x_sign = _mm256_and_pd(x, sign_bit);
    const __m256d ax = _mm256_andnot_pd(sign_bit, x);

    // octant index j, bumped to even
    __m256d y = _mm256_round_pd(_mm256_mul_pd(ax, _mm256_set1_pd(1.27323954473516268615)),
                                _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC);
    const __m256d half_y = _mm256_round_pd(_mm256_mul_pd(y, _mm256_set1_pd(0.5)),
                                           _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC);
    const __m256d odd = _mm256_sub_pd(y, _mm256_add_pd(half_y, half_y));
    y = _mm256_add_pd(y, odd);

    // quadrant = (j / 2) mod 4
    const __m256d jq = _mm256_mul_pd(y, _mm256_set1_pd(0.5));
    const __m256d quadrant = _mm256_sub_pd(
        jq, _mm256_mul_pd(_mm256_set1_pd(4.0), _mm256_round_pd(_mm256_mul_pd(jq, _mm256_set1_pd(0.25)),
                                                               _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC)));

    __m256d z = _mm256_fnmadd_pd(y, _mm256_set1_pd(7.85398125648498535156E-1), ax);
    z = _mm256_fnmadd_pd(y, _mm256_set1_pd(3.77489470793079817668E-8), z);
    z = _mm256_fnmadd_pd(y, _mm256_set1_pd(2.69515142907905952645E-15), z);
    const __m256d zz = _mm256_mul_pd(z, z);

    const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), polevl5(zz, S), z);
    const __m256d cos_r = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), polevl5(zz, C),
                                          _mm256_fnmadd_pd(_mm256_set1_pd(0.5), zz, _mm256_set1_pd(1.0)));

    // quadrant:   0    1    2    3
    //   sin      s    c   −s   −c
    //   cos      c   −s   −c    s
    const __m256d q1 = _mm256_cmp_pd(quadrant, _mm256_set1_pd(1.0), _CMP_EQ_OQ);
    const __m256d q2 = _mm256_cmp_pd(quadrant, _mm256_set1_pd(2.0), _CMP_EQ_OQ);
    const __m256d q3 = _mm256_cmp_pd(quadrant, _mm256_set1_pd(3.0), _CMP_EQ_OQ);
    const __m256d swap = _mm256_or_pd(q1, q3);
    __m256d s = _mm256_blendv_pd(sin_r, cos_r, swap);
    __m256d c = _mm256_blendv_pd(cos_r, sin_r, swap);
    const __m256d neg_s = _mm256_or_pd(q2, q3);
    const __m256d neg_c = _mm256_or_pd(q1, q2);
    s = _mm256_xor_pd(s, _mm256_and_pd(neg_s, sign_bit));
    c = _mm256_xor_pd(c, _mm256_and_pd(neg_c, sign_bit));

    s_out = _mm256_xor_pd(s, x_sign);
    c_out = c;
}

}  // namespace tfdc::kernels::avx2
