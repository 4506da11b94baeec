#include "clockwork/markov.hpp"

#include <cmath>
#include <string>

#include "clockwork/errors.hpp"

namespace clockwork {

std::string state_name(int state, int n_states) {
    if (n_states == 3) {
        switch (state) {
            case kState0: return "0";
            case kStateR: return "R";
            case kStateL: return "L";
            default: break;
        }
    }
    return std::to_string(state);
}

int state_index(const std::string& name, int n_states) {
    if (n_states == 3) {
        if (name == "0") return kState0;
        if (name == "R") return kStateR;
        if (name == "L") return kStateL;
    }
    try {
        const int idx = std::stoi(name);
        if (idx >= 0 && idx < n_states) return idx;
    } catch (const std::exception&) {
    }
    throw DataError("unknown state label: " + name);
}

Generator validate_generator(const Matrix& raw) {
    const int n = raw.rows();
    if (n < 2 || raw.cols() != n) {
        throw DataError("generator must be a square matrix with n >= 2");
    }
    Matrix m(n, n);
    for (int col = 0; col < n; ++col) {
        double exit = 0.0;
        bool any_positive = false;
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            const double rate = raw.at(row, col);
            if (!std::isfinite(rate)) {
                throw DataError("non-finite rate at (" + std::to_string(row) + "," +
                                std::to_string(col) + ")");
            }
            if (rate < 0.0) {
                throw NegativeRate("negative rate at (" + std::to_string(row) + "," +
                                   std::to_string(col) + ")");
            }
            m.at(row, col) = rate;
            exit += rate;
            any_positive |= rate > 0.0;
        }
        if (!any_positive) {
            throw AbsorbingState("column " + std::to_string(col) +
                                 " has no outgoing rate");
        }
        m.at(col, col) = -exit;
    }
    return Generator(std::move(m));
}

bool Generator::irreducible() const {
    const int n = this->n();
    // Reachability in both edge directions on the nonzero-rate graph.
    const auto reaches_all = [&](bool forward) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (j == i || seen[j]) continue;
                const double rate = forward ? m_.at(j, i) : m_.at(i, j);
                if (rate > 0.0) {
                    seen[j] = 1;
                    ++count;
                    stack.push_back(j);
                }
            }
        }
        return count == n;
    };
    return reaches_all(true) && reaches_all(false);
}

void Distribution::validate() const {
    double total = 0.0;
    for (const double v : p) {
        if (!(v >= 0.0)) throw DataError("distribution entry negative or NaN");
        total += v;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        throw DataError("distribution does not sum to one");
    }
}

Distribution steady_state(const Generator& g) {
    if (!g.irreducible()) {
        throw Reducible("generator is not irreducible");
    }
    const int n = g.n();
    // Replace the last balance equation with the normalization row; the
    // remaining rows stay independent for an irreducible generator.
    Matrix a = g.matrix();
    std::vector<double> b(static_cast<std::size_t>(n), 0.0);
    for (int c = 0; c < n; ++c) a.at(n - 1, c) = 1.0;
    b[static_cast<std::size_t>(n) - 1] = 1.0;

    std::vector<double> p = solve_linear(std::move(a), std::move(b));

    double total = 0.0;
    for (double& v : p) {
        if (v < 0.0) {
            if (v < -1e-12) throw NumericalError("steady state has negative entry");
            v = 0.0;
        }
        total += v;
    }
    for (double& v : p) v /= total;

    double residual = 0.0;
    for (int r = 0; r < n; ++r) {
        double acc = 0.0;
        for (int c = 0; c < n; ++c) acc += g.matrix().at(r, c) * p[c];
        residual = std::max(residual, std::fabs(acc));
    }
    if (residual > 1e-10) {
        throw NumericalError("steady-state residual above tolerance");
    }
    return Distribution{std::move(p)};
}

std::vector<double> exit_rates(const Generator& g) {
    std::vector<double> gamma(static_cast<std::size_t>(g.n()));
    for (int s = 0; s < g.n(); ++s) gamma[static_cast<std::size_t>(s)] = g.exit_rate(s);
    return gamma;
}

} // namespace clockwork
