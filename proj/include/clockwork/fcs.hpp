#ifndef CLOCKWORK_FCS_HPP
#define CLOCKWORK_FCS_HPP

#include <functional>

#include "clockwork/linalg.hpp"
#include "clockwork/markov.hpp"

namespace clockwork {

/// Counting weights nu_{j|i} attached to each transition i -> j of a linear
/// counting observable Theta(t) = sum w_{j|i} N_{j|i}(t).
class CountingWeights {
public:
    explicit CountingWeights(int n) : w_(n, n) {}

    int n() const { return w_.rows(); }
    double& at(int to, int from) { return w_.at(to, from); }
    double at(int to, int from) const { return w_.at(to, from); }

private:
    Matrix w_;
};

/// Net charge-transfer counting: +1/nu on R->0, -1/nu on 0->R.
CountingWeights net_weights(int n = 3, double nu = 1.0);

/// Optimal-estimator counting: 1/Gamma_i on every transition out of i.
CountingWeights opt_weights(const Generator& g);

/// Long-time growth statistics of a counting observable.
struct AsymptoticMoments {
    double drift = 0.0;      ///< E[Theta(t)]/t (1 for unbiased time estimators)
    double diffusion = 0.0;  ///< Var[Theta(t)]/t
    double precision = 0.0;  ///< drift^2 / diffusion, Hz
    bool infinite = false;   ///< deterministic observable (zero diffusion)
};

/// Off-diagonals scaled by exp(w_{j|i} * s); diagonals unchanged. Real
/// tilting: cumulants at s = 0 match the generating-function route.
Matrix tilted_generator(const Generator& g, const CountingWeights& w, double s);

/// Perron eigenvalue (largest real part, real for Metzler matrices). Exact
/// closed forms for n <= 3, shifted power iteration above.
double dominant_eigenvalue(const Matrix& m);

/// First two cumulant rates of the counting observable, via implicit
/// differentiation of the characteristic polynomial at the Perron root
/// (n = 3) or eigenvector perturbation (general n). No finite differences.
AsymptoticMoments asymptotic_moments(const Generator& g, const CountingWeights& w);

/// Analytic optimal precision S_opt = (sum_i p_i / Gamma_i)^)-1.
double optimal_precision(const Generator& g);

/// Renewal-process relations between tick-time moments and (rate, diffusion).
struct RenewalMoments {
    double mean_tick_time = 0.0;  ///< E[T] = 1/nu, seconds
    double var_tick_time = 0.0;   ///< Var[T] = D/nu^3, seconds^2
    double n_inf = 0.0;           ///< E[T]^2/Var[T] = nu/D
    double fano = 0.0;            ///< relative precision, equals n_inf here
    bool infinite = false;        ///< D = 0 sentinel
};
RenewalMoments renewal_moments(double nu, double diffusion);

/// Classical uncertainty bound nu * Sigma_tick / 2 for antisymmetric
/// current estimators.
double tur_bound(double nu, double sigma_tick_kb);
/// S <= bound within the statistical tolerance n_sigma * stderr.
bool tur_satisfied(double s_hz, double s_stderr_hz, double bound_hz,
                   double n_sigma = 3.0);

/// Gauss error propagation of per-rate standard errors through an arbitrary
/// precision functional; partials by central differences (one-sided at the
/// zero-rate boundary).
double precision_error_propagation(
    const Generator& g, const Matrix& rate_std_errors,
    const std::function<double(const Generator&)>& precision_of);

} // namespace clockwork

#endif
