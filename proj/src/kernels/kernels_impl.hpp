#ifndef CLOCKWORK_KERNELS_IMPL_HPP
#define CLOCKWORK_KERNELS_IMPL_HPP

#include <cstddef>
#include <cstdint>

namespace clockwork::kernels::detail {

// Backend function table. Reductions are "block" primitives: the dispatcher
// splits long arrays pairwise and calls these on bounded chunks, so the
// combination tree is identical for every backend.
struct KernelFuncs {
    void (*argmax_quad3)(const double* x, std::size_t n, const double* c2,
                         const double* c1, const double* c0, std::uint8_t* out);
    // idx[k] = trunc((x[k] - lo) * inv_w), saturating out-of-range to INT32_MIN.
    void (*bin_index)(const double* x, std::size_t n, double lo, double inv_w,
                      std::int32_t* idx);
    void (*affine_combine)(const double* x, const double* y, std::size_t n,
                           double cx, double cy, double c0, double* out);
    double (*block_sum)(const double* x, std::size_t n);
    double (*block_sum_sq_dev)(const double* x, std::size_t n, double center);
    double (*block_dot)(const double* x, const double* y, std::size_t n);
    double (*block_level_residual_sq)(const double* x, const std::uint8_t* idx,
                                      std::size_t n, const double* levels4);
};

const KernelFuncs& scalar_funcs();
#ifdef CLOCKWORK_HAVE_AVX2
const KernelFuncs& avx2_funcs();
#endif

inline constexpr std::size_t kReductionBlock = 256;

} // namespace clockwork::kernels::detail

#endif
