#include "clockwork/fcs.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "clockwork/errors.hpp"

namespace clockwork {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Largest real root of lambda^3 - T lambda^2 + C lambda - D = 0
/// (the characteristic polynomial of a 3x3 matrix, negated).
double cubic_max_real_root(double t, double c, double d) {
    const double m = t / 3.0;
    const double p = c - t * t / 3.0;
    const double q = -2.0 * t * t * t / 27.0 + c * t / 3.0 - d;

    double y;
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (p == 0.0 && q == 0.0) {
        y = 0.0;
    } else if (disc > 0.0) {
        // Three real roots; the k = 0 branch of the trigonometric form is
        // the largest.
        const double r = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * r);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg);
        y = r * std::cos(theta / 3.0);
    } else {
        // Single real root (Cardano); for Metzler matrices this is the
        // Perron root.
        const double half_q = q / 2.0;
        const double s = std::sqrt(half_q * half_q + p * p * p / 27.0);
        y = std::cbrt(-half_q + s) + std::cbrt(-half_q - s);
    }

    double lambda = y + m;
    // Newton polish against the original cubic.
    for (int iter = 0; iter < 3; ++iter) {
        const double f = ((lambda - t) * lambda + c) * lambda - d;
        const double df = (3.0 * lambda - 2.0 * t) * lambda + c;
        if (df == 0.0) break;
        const double step = f / df;
        lambda -= step;
        if (std::fabs(step) <= 1e-15 * (1.0 + std::fabs(lambda))) break;
    }
    return lambda;
}

struct CharPoly3 {
    double t;  // trace (tilt-independent)
    double c0, c1, c2;  // C(0) and its first two s-derivatives
    double d0, d1, d2;  // D(0) and its first two s-derivatives
};

/// Characteristic-polynomial data for the tilted matrix at s = 0: trace,
/// second elementary symmetric function C(s), determinant D(s), and their
/// s-derivatives obtained from the exponential tilt structure.
CharPoly3 char_poly3(const Matrix& a, const CountingWeights& w) {
    CharPoly3 cp{};
    cp.t = a.at(0, 0) + a.at(1, 1) + a.at(2, 2);

    static constexpr std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [i, j] : pairs) {
        cp.c0 += a.at(i, i) * a.at(j, j) - a.at(i, j) * a.at(j, i);
        const double prod = a.at(i, j) * a.at(j, i);
        const double sw = w.at(i, j) + w.at(j, i);
        cp.c1 -= sw * prod;
        cp.c2 -= sw * sw * prod;
    }

    struct Term {
        int sign;
        std::array<std::array<int, 2>, 3> entries;
    };
    static constexpr std::array<Term, 6> terms{{
        {+1, {{{0, 0}, {1, 1}, {2, 2}}}},
        {-1, {{{0, 1}, {1, 0}, {2, 2}}}},
        {-1, {{{0, 2}, {1, 1}, {2, 0}}}},
        {-1, {{{0, 0}, {1, 2}, {2, 1}}}},
        {+1, {{{0, 1}, {1, 2}, {2, 0}}}},
        {+1, {{{0, 2}, {1, 0}, {2, 1}}}},
    }};
    for (const auto& term : terms) {
        double prod = term.sign;
        double sw = 0.0;
        for (const auto& [r, c] : term.entries) {
            prod *= a.at(r, c);
            if (r != c) sw += w.at(r, c);
        }
        cp.d0 += prod;
        cp.d1 += sw * prod;
        cp.d2 += sw * sw * prod;
    }
    return cp;
}

double power_iteration_perron(const Matrix& m) {
    const int n = m.rows();
    double shift = 1.0;
    for (int i = 0; i < n; ++i) shift = std::max(shift, 1.0 - m.at(i, i));
    // Positive diagonal makes the shifted matrix primitive, so the iteration
    // converges even for periodic cycle structures.
    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / n);
    std::vector<double> y(static_cast<std::size_t>(n));
    double rho = 0.0;
    int stable = 0;
    for (int iter = 0; iter < 200000; ++iter) {
        for (int r = 0; r < n; ++r) {
            double acc = shift * x[static_cast<std::size_t>(r)];
            for (int c = 0; c < n; ++c) acc += m.at(r, c) * x[static_cast<std::size_t>(c)];
            y[static_cast<std::size_t>(r)] = acc;
        }
        double total = 0.0;
        for (const double v : y) total += v;
        if (!(total > 0.0) || !std::isfinite(total)) {
            throw ConvergenceFailure("power iteration produced invalid iterate");
        }
        const double rho_new = total;  // sum(x) stays normalized to 1
        for (int r = 0; r < n; ++r) x[static_cast<std::size_t>(r)] = y[static_cast<std::size_t>(r)] / total;
        if (std::fabs(rho_new - rho) <= 1e-14 * (1.0 + std::fabs(rho_new))) {
            if (++stable >= 4) return rho_new - shift;
        } else {
            stable = 0;
        }
        rho = rho_new;
    }
    throw ConvergenceFailure("power iteration did not converge");
}

} // namespace

CountingWeights net_weights(int n, double nu) {
    if (n < 3) throw DataError("net_weights requires at least three states");
    CountingWeights w(n);
    w.at(kState0, kStateR) = 1.0 / nu;
    w.at(kStateR, kState0) = -1.0 / nu;
    return w;
}

CountingWeights opt_weights(const Generator& g) {
    CountingWeights w(g.n());
    for (int from = 0; from < g.n(); ++from) {
        const double inv = 1.0 / g.exit_rate(from);
        for (int to = 0; to < g.n(); ++to) {
            if (to != from) w.at(to, from) = inv;
        }
    }
    return w;
}

Matrix tilted_generator(const Generator& g, const CountingWeights& w, double s) {
    if (w.n() != g.n()) throw DataError("tilted_generator: weight size mismatch");
    Matrix m = g.matrix();
    for (int r = 0; r < g.n(); ++r) {
        for (int c = 0; c < g.n(); ++c) {
            if (r != c) m.at(r, c) *= std::exp(w.at(r, c) * s);
        }
    }
    return m;
}

double dominant_eigenvalue(const Matrix& m) {
    const int n = m.rows();
    if (n != m.cols() || n < 1) throw DataError("dominant_eigenvalue: not square");
    if (n == 1) return m.at(0, 0);
    if (n == 2) {
        const double t = m.at(0, 0) + m.at(1, 1);
        const double det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        const double disc = std::max(t * t - 4.0 * det, 0.0);
        return (t + std::sqrt(disc)) / 2.0;
    }
    if (n == 3) {
        const double t = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
        double c = 0.0;
        static constexpr std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
        for (const auto& [i, j] : pairs) {
            c += m.at(i, i) * m.at(j, j) - m.at(i, j) * m.at(j, i);
        }
        const double d = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        return cubic_max_real_root(t, c, d);
    }
    return power_iteration_perron(m);
}

AsymptoticMoments asymptotic_moments(const Generator& g, const CountingWeights& w) {
    if (w.n() != g.n()) throw DataError("asymptotic_moments: weight size mismatch");
    const int n = g.n();

    double drift = 0.0;
    double diffusion = 0.0;
    double scale = 0.0;

    if (n == 3) {
        const CharPoly3 cp = char_poly3(g.matrix(), w);
        const double lambda0 = cubic_max_real_root(cp.t, cp.c0, cp.d0);
        const double p_l = -3.0 * lambda0 * lambda0 + 2.0 * cp.t * lambda0 - cp.c0;
        const double p_s = -cp.c1 * lambda0 + cp.d1;
        const double p_ll = -6.0 * lambda0 + 2.0 * cp.t;
        const double p_sl = -cp.c1;
        const double p_ss = -cp.c2 * lambda0 + cp.d2;
        if (p_l == 0.0) throw ConvergenceFailure("degenerate Perron root");
        drift = -p_s / p_l;
        const double numer = p_ss + 2.0 * p_sl * drift + p_ll * drift * drift;
        diffusion = -numer / p_l;
        scale = (std::fabs(p_ss) + 2.0 * std::fabs(p_sl * drift) +
                 std::fabs(p_ll * drift * drift)) /
                std::fabs(p_l);
    } else {
        // Eigenvector perturbation at s = 0: the Perron root is 0 with right
        // vector p (steady state) and left vector 1.
        const Distribution ss = steady_state(g);
        Matrix m1(n, n);  // dM/ds at 0
        Matrix m2(n, n);  // d2M/ds2 at 0
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                if (r == c) continue;
                const double wv = w.at(r, c);
                m1.at(r, c) = wv * g.matrix().at(r, c);
                m2.at(r, c) = wv * wv * g.matrix().at(r, c);
            }
        }
        const auto apply = [&](const Matrix& m, const std::vector<double>& v) {
            std::vector<double> out(static_cast<std::size_t>(n), 0.0);
            for (int r = 0; r < n; ++r) {
                double acc = 0.0;
                for (int c = 0; c < n; ++c) acc += m.at(r, c) * v[static_cast<std::size_t>(c)];
                out[static_cast<std::size_t>(r)] = acc;
            }
            return out;
        };
        const auto colsum = [&](const std::vector<double>& v) {
            double acc = 0.0;
            for (const double x : v) acc += x;
            return acc;
        };
        const std::vector<double> m1p = apply(m1, ss.p);
        drift = colsum(m1p);
        // Solve M u' = drift * p - M' p with the gauge sum(u') = 0.
        Matrix a = g.matrix();
        std::vector<double> rhs(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            rhs[static_cast<std::size_t>(r)] =
                drift * ss.p[static_cast<std::size_t>(r)] - m1p[static_cast<std::size_t>(r)];
        }
        for (int c = 0; c < n; ++c) a.at(n - 1, c) = 1.0;
        rhs[static_cast<std::size_t>(n) - 1] = 0.0;
        const std::vector<double> uprime = solve_linear(std::move(a), std::move(rhs));
        diffusion = colsum(apply(m2, ss.p)) + 2.0 * colsum(apply(m1, uprime));
        scale = std::fabs(diffusion) + std::fabs(drift) * std::fabs(drift);
    }

    // Round-off guard: a genuinely deterministic observable gives an exact
    // zero second cumulant only in exact arithmetic.
    if (diffusion < 0.0 && -diffusion <= 1e-10 * (scale + 1e-300)) diffusion = 0.0;
    if (diffusion < 0.0) {
        throw ConvergenceFailure("negative diffusion outside round-off band");
    }

    AsymptoticMoments out;
    out.drift = drift;
    out.diffusion = diffusion;
    if (diffusion == 0.0) {
        out.infinite = true;
        out.precision = kInf;
    } else {
        out.precision = drift * drift / diffusion;
    }
    return out;
}

double optimal_precision(const Generator& g) {
    const Distribution ss = steady_state(g);
    double acc = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        acc += ss.p[static_cast<std::size_t>(i)] / g.exit_rate(i);
    }
    return 1.0 / acc;
}

RenewalMoments renewal_moments(double nu, double diffusion) {
    if (!(nu > 0.0)) throw ZeroRate("renewal_moments: tick rate must be positive");
    if (diffusion < 0.0) throw DataError("renewal_moments: negative diffusion");
    RenewalMoments out;
    out.mean_tick_time = 1.0 / nu;
    if (diffusion == 0.0) {
        out.var_tick_time = 0.0;
        out.n_inf = kInf;
        out.fano = kInf;
        out.infinite = true;
        return out;
    }
    out.var_tick_time = diffusion / (nu * nu * nu);
    out.n_inf = nu / diffusion;
    out.fano = out.n_inf;
    return out;
}

double tur_bound(double nu, double sigma_tick_kb) {
    if (sigma_tick_kb < 0.0) throw DataError("tur_bound: negative entropy per tick");
    return std::fabs(nu) * sigma_tick_kb / 2.0;
}

bool tur_satisfied(double s_hz, double s_stderr_hz, double bound_hz, double n_sigma) {
    return s_hz <= bound_hz + n_sigma * s_stderr_hz;
}

double precision_error_propagation(
    const Generator& g, const Matrix& rate_std_errors,
    const std::function<double(const Generator&)>& precision_of) {
    const int n = g.n();
    if (rate_std_errors.rows() != n || rate_std_errors.cols() != n) {
        throw DataError("precision_error_propagation: error matrix size mismatch");
    }
    double rate_scale = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (r != c) rate_scale = std::max(rate_scale, g.rate(r, c));
        }
    }
    const double base = precision_of(g);
    double var = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (r == c) continue;
            const double err = rate_std_errors.at(r, c);
            if (err == 0.0) continue;
            const double rate = g.rate(r, c);
            const double h = 1e-6 * std::max(rate, rate_scale);
            const auto eval = [&](double value) {
                Matrix raw = g.matrix();
                raw.at(r, c) = value;
                return precision_of(validate_generator(raw));
            };
            double deriv;
            if (rate - h >= 0.0) {
                deriv = (eval(rate + h) - eval(rate - h)) / (2.0 * h);
            } else {
                deriv = (eval(rate + h) - base) / h;
            }
            var += deriv * deriv * err * err;
        }
    }
    return std::sqrt(var);
}

} // namespace clockwork
