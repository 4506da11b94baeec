#ifndef CLOCKWORK_KERNELS_HPP
#define CLOCKWORK_KERNELS_HPP

#include <array>
#include <cstdint>
#include <span>

namespace clockwork::kernels {

/// Trace-level arithmetic kernels. Each operation has a scalar reference
/// implementation and an AVX2 variant selected at runtime; both follow the
/// same operation order (explicit fused multiply-adds, fixed four-lane
/// accumulation, pairwise block combination), so results are bit-identical
/// across backends. Large reductions use pairwise summation.
enum class Backend { scalar, avx2 };

bool avx2_supported();
Backend active();
/// Pin the backend (tests); throws DataError when unavailable.
void force(Backend backend);
/// Back to automatic selection (honors CLOCKWORK_SIMD=scalar|avx2).
void reset();

/// Per-sample argmax over three quadratics c2[i]*x^2 + c1[i]*x + c0[i].
/// Ties resolve to the lowest index. Used for log-density classification.
void argmax_quad3(std::span<const double> x, const std::array<double, 3>& c2,
                  const std::array<double, 3>& c1, const std::array<double, 3>& c0,
                  std::span<std::uint8_t> out);

/// Accumulates counts of x over equidistant bins spanning [lo, hi].
/// Values inside the window always land in a bin (boundary round-off is
/// clamped to the edge bins); values outside are ignored.
void bin_count(std::span<const double> x, double lo, double hi,
               std::span<std::uint32_t> counts);

double sum(std::span<const double> x);
double mean(std::span<const double> x);
/// Sum of squared deviations from `center`.
double sum_sq_dev(std::span<const double> x, double center);
double dot(std::span<const double> x, std::span<const double> y);
/// Sum of squared residuals x[k] - levels[idx[k]]; idx values must be < 3.
double level_residual_sq(std::span<const double> x,
                         std::span<const std::uint8_t> idx,
                         const std::array<double, 3>& levels);
/// out[k] = cx*x[k] + cy*y[k] + c0 (principal-component projection).
void affine_combine(std::span<const double> x, std::span<const double> y,
                    double cx, double cy, double c0, std::span<double> out);

} // namespace clockwork::kernels

#endif
