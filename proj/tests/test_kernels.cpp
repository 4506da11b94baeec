#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "clockwork/kernels.hpp"
#include "clockwork/rng.hpp"

namespace k = clockwork::kernels;

namespace {

std::vector<double> random_values(std::size_t n, std::uint64_t seed,
                                  double lo = -5.0, double hi = 5.0) {
    clockwork::Rng rng(seed);
    std::vector<double> x(n);
    for (double& v : x) v = lo + (hi - lo) * rng.uniform();
    return x;
}

const std::vector<std::size_t> kSizes{0, 1, 2, 3, 4, 5, 7, 8, 63, 255, 256, 257, 1000, 10007};

template <typename Fn>
void for_both_backends(const Fn& fn) {
    k::force(k::Backend::scalar);
    fn();
    if (k::avx2_supported()) {
        k::force(k::Backend::avx2);
        fn();
    }
    k::reset();
}

} // namespace

TEST_CASE("kernel backends produce bit-identical results") {
    if (!k::avx2_supported()) return;

    const std::array<double, 3> c2{-0.5, -2.0, -0.125};
    const std::array<double, 3> c1{0.3, 1.7, -0.9};
    const std::array<double, 3> c0{0.0, -0.4, 0.2};
    const std::array<double, 3> levels{-1.25, 0.5, 2.75};

    for (const std::size_t n : kSizes) {
        const std::vector<double> x = random_values(n, 11 + n);
        const std::vector<double> y = random_values(n, 77 + n);
        std::vector<std::uint8_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint8_t>(i % 3);

        k::force(k::Backend::scalar);
        std::vector<std::uint8_t> cls_s(n);
        k::argmax_quad3(x, c2, c1, c0, cls_s);
        std::vector<std::uint32_t> counts_s(16, 0);
        k::bin_count(x, -5.0, 5.0, counts_s);
        const double sum_s = k::sum(x);
        const double dev_s = k::sum_sq_dev(x, 0.25);
        const double dot_s = k::dot(x, y);
        const double res_s = k::level_residual_sq(x, idx, levels);
        std::vector<double> comb_s(n);
        k::affine_combine(x, y, 0.6, -0.8, 0.05, comb_s);

        k::force(k::Backend::avx2);
        std::vector<std::uint8_t> cls_v(n);
        k::argmax_quad3(x, c2, c1, c0, cls_v);
        std::vector<std::uint32_t> counts_v(16, 0);
        k::bin_count(x, -5.0, 5.0, counts_v);
        const double sum_v = k::sum(x);
        const double dev_v = k::sum_sq_dev(x, 0.25);
        const double dot_v = k::dot(x, y);
        const double res_v = k::level_residual_sq(x, idx, levels);
        std::vector<double> comb_v(n);
        k::affine_combine(x, y, 0.6, -0.8, 0.05, comb_v);

        CHECK(cls_s == cls_v);
        CHECK(counts_s == counts_v);
        CHECK(sum_s == sum_v);
        CHECK(dev_s == dev_v);
        CHECK(dot_s == dot_v);
        CHECK(res_s == res_v);
        CHECK(comb_s == comb_v);
    }
    k::reset();
}

TEST_CASE("argmax_quad3 matches a naive evaluation") {
    const std::array<double, 3> c2{-1.0, -0.5, -0.25};
    const std::array<double, 3> c1{0.0, 2.0, -1.0};
    const std::array<double, 3> c0{0.1, -0.7, 0.4};
    const std::vector<double> x = random_values(4096, 3);
    std::vector<std::uint8_t> out(x.size());

    for_both_backends([&] {
        k::argmax_quad3(x, c2, c1, c0, out);
        for (std::size_t i = 0; i < x.size(); ++i) {
            double best = -1e300;
            std::uint8_t arg = 0;
            for (std::uint8_t j = 0; j < 3; ++j) {
                const double s = std::fma(std::fma(c2[j], x[i], c1[j]), x[i], c0[j]);
                if (s > best) {
                    best = s;
                    arg = j;
                }
            }
            REQUIRE(out[i] == arg);
        }
    });
}

TEST_CASE("bin_count covers the window and drops outsiders") {
    for_both_backends([&] {
        const std::vector<double> x{0.0, 0.999, 1.0, 0.5, -0.1, 1.1, 0.25};
        std::vector<std::uint32_t> counts(4, 0);
        k::bin_count(x, 0.0, 1.0, counts);
        // -0.1 and 1.1 fall outside; bins are left-closed; 1.0 lands in the
        // last bin.
        CHECK(counts[0] == 1);  // 0.0
        CHECK(counts[1] == 1);  // 0.25
        CHECK(counts[2] == 1);  // 0.5
        CHECK(counts[3] == 2);  // 0.999, 1.0
    });
}

TEST_CASE("pairwise sum tracks a long-double reference") {
    const std::vector<double> x = random_values(100000, 5, -1.0, 1.0);
    long double ref = 0.0L;
    for (const double v : x) ref += static_cast<long double>(v);
    for_both_backends([&] {
        const double s = k::sum(x);
        CHECK(std::fabs(s - static_cast<double>(ref)) <=
              1e-12 * std::max(1.0, std::fabs(static_cast<double>(ref))));
    });
}

TEST_CASE("reduction edge cases") {
    for_both_backends([&] {
        CHECK(k::sum(std::vector<double>{}) == 0.0);
        CHECK(k::sum(std::vector<double>{2.5}) == 2.5);
        CHECK(k::sum_sq_dev(std::vector<double>{1.0, 3.0}, 2.0) == 2.0);
        CHECK(k::dot(std::vector<double>{1.0, 2.0}, std::vector<double>{3.0, 4.0}) ==
              11.0);
    });
}

TEST_CASE("level_residual_sq gathers the right levels") {
    const std::array<double, 3> levels{-1.0, 0.0, 1.0};
    const std::vector<double> x{-1.5, 0.25, 1.0, 0.0};
    const std::vector<std::uint8_t> idx{0, 1, 2, 2};
    for_both_backends([&] {
        const double got = k::level_residual_sq(x, idx, levels);
        CHECK(got == doctest::Approx(0.25 + 0.0625 + 0.0 + 1.0).epsilon(1e-15));
    });
}
