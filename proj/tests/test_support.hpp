#ifndef CLOCKWORK_TEST_SUPPORT_HPP
#define CLOCKWORK_TEST_SUPPORT_HPP

// Oracle helpers for tests. These deliberately avoid the library's numeric
// paths (kernels, solvers) so expectations stay independent of the code
// under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "clockwork/linalg.hpp"
#include "clockwork/markov.hpp"
#include "clockwork/rng.hpp"

namespace testsupport {

inline double naive_mean(const std::vector<double>& x) {
    double s = 0.0;
    for (const double v : x) s += v;
    return s / static_cast<double>(x.size());
}

inline double naive_variance(const std::vector<double>& x) {
    const double m = naive_mean(x);
    double s = 0.0;
    for (const double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size() - 1);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// One-sample Kolmogorov-Smirnov test. Returns true when the hypothesis
/// survives at the given significance (asymptotic critical values).
inline bool ks_passes(std::vector<double> samples,
                      const std::function<double(double)>& cdf,
                      double alpha = 0.01) {
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    const double critical = (alpha == 0.01 ? 1.6276 : 1.3581) / std::sqrt(n);
    return d <= critical;
}

/// Stationary distribution of a 3x3 generator via the matrix-tree identity
/// p_i proportional to the (i,i) principal minor. Independent of the
/// elimination-based solver in the library.
inline std::vector<double> cofactor_steady_state(const clockwork::Matrix& m) {
    const auto minor_det = [&](int skip) {
        int idx[2];
        int k = 0;
        for (int i = 0; i < 3; ++i) {
            if (i != skip) idx[k++] = i;
        }
        return m.at(idx[0], idx[0]) * m.at(idx[1], idx[1]) -
               m.at(idx[0], idx[1]) * m.at(idx[1], idx[0]);
    };
    std::vector<double> p{minor_det(0), minor_det(1), minor_det(2)};
    const double total = p[0] + p[1] + p[2];
    for (double& v : p) v /= total;
    return p;
}

/// Random irreducible 3-state generator with off-diagonal rates in
/// [lo, hi).
inline clockwork::Generator random_generator3(clockwork::Rng& rng, double lo,
                                              double hi) {
    clockwork::Matrix raw(3, 3);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (r != c) raw.at(r, c) = lo + (hi - lo) * rng.uniform();
        }
    }
    return clockwork::validate_generator(raw);
}

/// The three-state unidirectional cycle 0 -> L -> R -> 0 at a common rate.
inline clockwork::Generator cycle_generator(double gamma) {
    using clockwork::kState0;
    using clockwork::kStateL;
    using clockwork::kStateR;
    clockwork::Matrix raw(3, 3);
    raw.at(kStateL, kState0) = gamma;
    raw.at(kStateR, kStateL) = gamma;
    raw.at(kState0, kStateR) = gamma;
    return clockwork::validate_generator(raw);
}

/// Symmetric generator with every off-diagonal rate equal.
inline clockwork::Generator symmetric_generator(double gamma) {
    clockwork::Matrix raw(3, 3);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (r != c) raw.at(r, c) = gamma;
        }
    }
    return clockwork::validate_generator(raw);
}

/// Cycle-biased generator: base rate gamma on all six transitions, with the
/// forward cycle 0 -> L -> R -> 0 boosted by exp(+affinity/6) and the
/// reverse attenuated by exp(-affinity/6), so one full forward cycle
/// dissipates `affinity` (in units of k_B).
inline clockwork::Generator biased_generator(double gamma, double affinity) {
    using clockwork::kState0;
    using clockwork::kStateL;
    using clockwork::kStateR;
    const double f = gamma * std::exp(affinity / 6.0);
    const double b = gamma * std::exp(-affinity / 6.0);
    clockwork::Matrix raw(3, 3);
    raw.at(kStateL, kState0) = f;  // 0 -> L
    raw.at(kStateR, kStateL) = f;  // L -> R
    raw.at(kState0, kStateR) = f;  // R -> 0
    raw.at(kState0, kStateL) = b;  // L -> 0
    raw.at(kStateL, kStateR) = b;  // R -> L
    raw.at(kStateR, kState0) = b;  // 0 -> R
    return clockwork::validate_generator(raw);
}

} // namespace testsupport

#endif
