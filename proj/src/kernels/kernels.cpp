#include "clockwork/kernels.hpp"

#include <cstdlib>
#include <string>

#include "clockwork/errors.hpp"
#include "kernels_impl.hpp"

namespace clockwork::kernels {

namespace {

using detail::KernelFuncs;
using detail::kReductionBlock;

bool cpu_has_avx2() {
#if defined(CLOCKWORK_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend auto_backend() {
    if (const char* env = std::getenv("CLOCKWORK_SIMD")) {
        const std::string value(env);
        if (value == "scalar") return Backend::scalar;
        if (value == "avx2" && cpu_has_avx2()) return Backend::avx2;
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

Backend& current_backend() {
    static Backend backend = auto_backend();
    return backend;
}

const KernelFuncs& funcs() {
#if defined(CLOCKWORK_HAVE_AVX2)
    if (current_backend() == Backend::avx2) return detail::avx2_funcs();
#endif
    return detail::scalar_funcs();
}

// Pairwise reduction driver: splits at a multiple of four so every backend
// sees the same lane alignment in every block.
template <typename BlockFn>
double pairwise(std::size_t n, std::size_t offset, const BlockFn& block) {
    if (n <= kReductionBlock) return block(offset, n);
    const std::size_t half = ((n + 1) / 2 + 3) & ~std::size_t(3);
    return pairwise(half, offset, block) + pairwise(n - half, offset + half, block);
}

} // namespace

bool avx2_supported() { return cpu_has_avx2(); }

Backend active() { return current_backend(); }

void force(Backend backend) {
    if (backend == Backend::avx2 && !cpu_has_avx2()) {
        throw DataError("kernels: AVX2 backend unavailable on this host");
    }
    current_backend() = backend;
}

void reset() { current_backend() = auto_backend(); }

void argmax_quad3(std::span<const double> x, const std::array<double, 3>& c2,
                  const std::array<double, 3>& c1, const std::array<double, 3>& c0,
                  std::span<std::uint8_t> out) {
    if (out.size() != x.size()) throw DataError("argmax_quad3: output size mismatch");
    funcs().argmax_quad3(x.data(), x.size(), c2.data(), c1.data(), c0.data(),
                         out.data());
}

void bin_count(std::span<const double> x, double lo, double hi,
               std::span<std::uint32_t> counts) {
    const int nbins = static_cast<int>(counts.size());
    if (nbins <= 0 || !(hi > lo)) throw DataError("bin_count: invalid window");
    const double inv_w = static_cast<double>(nbins) / (hi - lo);
    constexpr std::size_t kChunk = 4096;
    std::int32_t idx[kChunk];
    std::size_t pos = 0;
    while (pos < x.size()) {
        const std::size_t len = std::min(kChunk, x.size() - pos);
        funcs().bin_index(x.data() + pos, len, lo, inv_w, idx);
        for (std::size_t i = 0; i < len; ++i) {
            const double v = x[pos + i];
            if (!(v >= lo && v <= hi)) continue; // outside the window
            std::int32_t b = idx[i];
            // Clamp boundary round-off (x == hi, or trunc artifacts at lo).
            if (b < 0) b = 0;
            if (b >= nbins) b = nbins - 1;
            ++counts[static_cast<std::size_t>(b)];
        }
        pos += len;
    }
}

double sum(std::span<const double> x) {
    const KernelFuncs& f = funcs();
    return pairwise(x.size(), 0, [&](std::size_t off, std::size_t n) {
        return f.block_sum(x.data() + off, n);
    });
}

double mean(std::span<const double> x) {
    if (x.empty()) throw DataError("mean: empty input");
    return sum(x) / static_cast<double>(x.size());
}

double sum_sq_dev(std::span<const double> x, double center) {
    const KernelFuncs& f = funcs();
    return pairwise(x.size(), 0, [&](std::size_t off, std::size_t n) {
        return f.block_sum_sq_dev(x.data() + off, n, center);
    });
}

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DataError("dot: size mismatch");
    const KernelFuncs& f = funcs();
    return pairwise(x.size(), 0, [&](std::size_t off, std::size_t n) {
        return f.block_dot(x.data() + off, y.data() + off, n);
    });
}

double level_residual_sq(std::span<const double> x,
                         std::span<const std::uint8_t> idx,
                         const std::array<double, 3>& levels) {
    if (x.size() != idx.size()) throw DataError("level_residual_sq: size mismatch");
    const double levels4[4] = {levels[0], levels[1], levels[2], 0.0};
    const KernelFuncs& f = funcs();
    return pairwise(x.size(), 0, [&](std::size_t off, std::size_t n) {
        return f.block_level_residual_sq(x.data() + off, idx.data() + off, n, levels4);
    });
}

void affine_combine(std::span<const double> x, std::span<const double> y,
                    double cx, double cy, double c0, std::span<double> out) {
    if (x.size() != y.size() || out.size() != x.size()) {
        throw DataError("affine_combine: size mismatch");
    }
    funcs().affine_combine(x.data(), y.data(), x.size(), cx, cy, c0, out.data());
}

} // namespace clockwork::kernels
