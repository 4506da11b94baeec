#include <cmath>
#include <cstdint>
#include <limits>

#include "kernels_impl.hpp"

// Reference backend. Operation order matches the AVX2 backend exactly:
// std::fma everywhere the vector code uses vfmadd, and reductions run four
// interleaved accumulators combined as (a0+a2)+(a1+a3) before the tail.

namespace clockwork::kernels::detail {
namespace {

void argmax_quad3_scalar(const double* x, std::size_t n, const double* c2,
                         const double* c1, const double* c0, std::uint8_t* out) {
    for (std::size_t i = 0; i < n; ++i) {
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

void bin_index_scalar(const double* x, std::size_t n, double lo, double inv_w,
                      std::int32_t* idx) {
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (x[i] - lo) * inv_w;
        // Saturation mirrors the AVX2 cvttpd overflow result (INT32_MIN).
        if (t > -2147483649.0 && t < 2147483648.0) {
            idx[i] = static_cast<std::int32_t>(t);
        } else {
            idx[i] = std::numeric_limits<std::int32_t>::min();
        }
    }
}

void affine_combine_scalar(const double* x, const double* y, std::size_t n,
                           double cx, double cy, double c0, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::fma(cx, x[i], std::fma(cy, y[i], c0));
    }
}

double block_sum_scalar(const double* x, std::size_t n) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    const std::size_t k = n & ~std::size_t(3);
    for (std::size_t i = 0; i < k; i += 4) {
        a0 += x[i];
        a1 += x[i + 1];
        a2 += x[i + 2];
        a3 += x[i + 3];
    }
    double s = (a0 + a2) + (a1 + a3);
    for (std::size_t i = k; i < n; ++i) s += x[i];
    return s;
}

double block_sum_sq_dev_scalar(const double* x, std::size_t n, double center) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    const std::size_t k = n & ~std::size_t(3);
    for (std::size_t i = 0; i < k; i += 4) {
        const double d0 = x[i] - center;
        const double d1 = x[i + 1] - center;
        const double d2 = x[i + 2] - center;
        const double d3 = x[i + 3] - center;
        a0 = std::fma(d0, d0, a0);
        a1 = std::fma(d1, d1, a1);
        a2 = std::fma(d2, d2, a2);
        a3 = std::fma(d3, d3, a3);
    }
    double s = (a0 + a2) + (a1 + a3);
    for (std::size_t i = k; i < n; ++i) {
        const double d = x[i] - center;
        s = std::fma(d, d, s);
    }
    return s;
}

double block_dot_scalar(const double* x, const double* y, std::size_t n) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    const std::size_t k = n & ~std::size_t(3);
    for (std::size_t i = 0; i < k; i += 4) {
        a0 = std::fma(x[i], y[i], a0);
        a1 = std::fma(x[i + 1], y[i + 1], a1);
        a2 = std::fma(x[i + 2], y[i + 2], a2);
        a3 = std::fma(x[i + 3], y[i + 3], a3);
    }
    double s = (a0 + a2) + (a1 + a3);
    for (std::size_t i = k; i < n; ++i) s = std::fma(x[i], y[i], s);
    return s;
}

double block_level_residual_sq_scalar(const double* x, const std::uint8_t* idx,
                                      std::size_t n, const double* levels4) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    const std::size_t k = n & ~std::size_t(3);
    for (std::size_t i = 0; i < k; i += 4) {
        const double d0 = x[i] - levels4[idx[i]];
        const double d1 = x[i + 1] - levels4[idx[i + 1]];
        const double d2 = x[i + 2] - levels4[idx[i + 2]];
        const double d3 = x[i + 3] - levels4[idx[i + 3]];
        a0 = std::fma(d0, d0, a0);
        a1 = std::fma(d1, d1, a1);
        a2 = std::fma(d2, d2, a2);
        a3 = std::fma(d3, d3, a3);
    }
    double s = (a0 + a2) + (a1 + a3);
    for (std::size_t i = k; i < n; ++i) {
        const double d = x[i] - levels4[idx[i]];
        s = std::fma(d, d, s);
    }
    return s;
}

} // namespace

const KernelFuncs& scalar_funcs() {
    static const KernelFuncs funcs{
        argmax_quad3_scalar,    bin_index_scalar, affine_combine_scalar,
        block_sum_scalar,       block_sum_sq_dev_scalar,
        block_dot_scalar,       block_level_residual_sq_scalar,
    };
    return funcs;
}

} // namespace clockwork::kernels::detail
