#ifdef CLOCKWORK_HAVE_AVX2

#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <cstring>

#include "kernels_impl.hpp"

// AVX2/FMA backend. Mirrors the scalar reference operation for operation;
// see kernels_scalar.cpp for the ordering contract.

namespace clockwork::kernels::detail {
namespace {

inline double hsum_lanes(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);      // (a0, a1)
    const __m128d hi = _mm256_extractf128_pd(acc, 1);    // (a2, a3)
    const __m128d pair = _mm_add_pd(lo, hi);             // (a0+a2, a1+a3)
    return _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
}

void argmax_quad3_avx2(const double* x, std::size_t n, const double* c2,
                       const double* c1, const double* c0, std::uint8_t* out) {
    const std::size_t k = n & ~std::size_t(3);
    const __m256d c2v[3] = {_mm256_set1_pd(c2[0]), _mm256_set1_pd(c2[1]),
                            _mm256_set1_pd(c2[2])};
    const __m256d c1v[3] = {_mm256_set1_pd(c1[0]), _mm256_set1_pd(c1[1]),
                            _mm256_set1_pd(c1[2])};
    const __m256d c0v[3] = {_mm256_set1_pd(c0[0]), _mm256_set1_pd(c0[1]),
                            _mm256_set1_pd(c0[2])};
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i two = _mm256_set1_epi64x(2);
    alignas(32) std::int64_t buf[4];
    for (std::size_t i = 0; i < k; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        const __m256d s0 =
            _mm256_fmadd_pd(_mm256_fmadd_pd(c2v[0], v, c1v[0]), v, c0v[0]);
        const __m256d s1 =
            _mm256_fmadd_pd(_mm256_fmadd_pd(c2v[1], v, c1v[1]), v, c0v[1]);
        const __m256d s2 =
            _mm256_fmadd_pd(_mm256_fmadd_pd(c2v[2], v, c1v[2]), v, c0v[2]);
        __m256d best = s0;
        __m256i idx = _mm256_setzero_si256();
        const __m256d m1 = _mm256_cmp_pd(s1, best, _CMP_GT_OQ);
        best = _mm256_blendv_pd(best, s1, m1);
        idx = _mm256_blendv_epi8(idx, one, _mm256_castpd_si256(m1));
        const __m256d m2 = _mm256_cmp_pd(s2, best, _CMP_GT_OQ);
        idx = _mm256_blendv_epi8(idx, two, _mm256_castpd_si256(m2));
        _mm256_store_si256(reinterpret_cast<__m256i*>(buf), idx);
        out[i] = static_cast<std::uint8_t>(buf[0]);
        out[i + 1] = static_cast<std::uint8_t>(buf[1]);
        out[i + 2] = static_cast<std::uint8_t>(buf[2]);
        out[i + 3] = static_cast<std::uint8_t>(buf[3]);
    }
    for (std::size_t i = k; i < n; ++i) {
        const double v = x[i];
        const double s0 = std::fma(std::fma(c2[0], v, c1[0]), v, c0[0]);
        const double s1 = std::fma(std::fma(c2[1], v, c1[1]), v, c0[1]);
        const double s2 = std::fma(std::fma(c2[2], v, c1[2]), v, c0[2]);
        std::uint8_t idx = 0;
        double best = s0;
        if (s1 > best) {
            best = s1;
            idx = 1;
        }
        if (s2 > best) idx = 2;
        out[i] = idx;
    }
}

void bin_index_avx2(const double* x, std::size_t n, double lo, double inv_w,
                    std::int32_t* idx) {
    const std::size_t k = n & ~std::size_t(3);
    const __m256d lov = _mm256_set1_pd(lo);
    const __m256d wv = _mm256_set1_pd(inv_w);
    for (std::size_t i = 0; i < k; i += 4) {
        const __m256d t = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), lov), wv);
        // cvttpd saturates out-of-range values to INT32_MIN, as does the
        // scalar reference.
        const __m128i iv = _mm256_cvttpd_epi32(t);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(idx + i), iv);
    }
    for (std::size_t i = k; i < n; ++i) {
        const double t = (x[i] - lo) * inv_w;
        if (t > -2147483649.0 && t < 2147483648.0) {
            idx[i] = static_cast<std::int32_t>(t);
        } else {
            idx[i] = INT32_MIN;
        }
    }
}

void affine_combine_avx2(const double* x, const double* y, std::size_t n,
                         double cx, double cy, double c0, double* out) {
    const std::size_t k = n & ~std::size_t(3);
    const __m256d cxv = _mm256_set1_pd(cx);
    const __m256d cyv = _mm256_set1_pd(cy);
    const __m256d c0v = _mm256_set1_pd(c0);
    for (std::size_t i = 0; i < k; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d yv = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(out + i,
                         _mm256_fmadd_pd(cxv, xv, _mm256_fmadd_pd(cyv, yv, c0v)));
    }
    for (std::size_t i = k; i < n; ++i) {
        out[i] = std::fma(cx, x[i], std::fma(cy, y[i], c0));
    }
}

double block_sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t k = n & ~std::size_t(3);
    for (std::size_t i = 0; i < k; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    }
    double s = hsum_lanes(acc);
    for (std::size_t i = k; i < n; ++i) s += x[i];
    return s;
}

double block_sum_sq_dev_avx2(const double* x, std::size_t n, double center) {
    __m256d acc = _mm256_setzero_pd();
    const __m256d c = _mm256_set1_pd(center);
    const std::size_t k = n & ~std::size_t(3);
    for (std::size_t i = 0; i < k; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), c);
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum_lanes(acc);
    for (std::size_t i = k; i < n; ++i) {
        const double d = x[i] - center;
        s = std::fma(d, d, s);
    }
    return s;
}

double block_dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t k = n & ~std::size_t(3);
    for (std::size_t i = 0; i < k; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
    }
    double s = hsum_lanes(acc);
    for (std::size_t i = k; i < n; ++i) s = std::fma(x[i], y[i], s);
    return s;
}

double block_level_residual_sq_avx2(const double* x, const std::uint8_t* idx,
                                    std::size_t n, const double* levels4) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t k = n & ~std::size_t(3);
    for (std::size_t i = 0; i < k; i += 4) {
        std::uint32_t packed;
        std::memcpy(&packed, idx + i, 4);
        const __m128i bytes = _mm_cvtsi32_si128(static_cast<int>(packed));
        const __m128i idx4 = _mm_cvtepu8_epi32(bytes);
        const __m256d lv = _mm256_i32gather_pd(levels4, idx4, 8);
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), lv);
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum_lanes(acc);
    for (std::size_t i = k; i < n; ++i) {
        const double d = x[i] - levels4[idx[i]];
        s = std::fma(d, d, s);
    }
    return s;
}

} // namespace

const KernelFuncs& avx2_funcs() {
    static const KernelFuncs funcs{
        argmax_quad3_avx2,    bin_index_avx2, affine_combine_avx2,
        block_sum_avx2,       block_sum_sq_dev_avx2,
        block_dot_avx2,       block_level_residual_sq_avx2,
    };
    return funcs;
}

} // namespace clockwork::kernels::detail

#endif // CLOCKWORK_HAVE_AVX2
