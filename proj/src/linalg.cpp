#include "clockwork/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "clockwork/errors.hpp"

namespace clockwork {

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
    const int n = a.rows();
    if (n != a.cols() || static_cast<int>(b.size()) != n) {
        throw DataError("solve_linear: dimension mismatch");
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::fabs(a.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::fabs(a.at(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0 || !std::isfinite(best)) {
            throw SingularMatrix("solve_linear: singular pivot column");
        }
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(pivot, c));
            std::swap(b[col], b[pivot]);
        }
        const double inv = 1.0 / a.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = a.at(r, col) * inv;
            if (f == 0.0) continue;
            a.at(r, col) = 0.0;
            for (int c = col + 1; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a.at(r, c) * x[c];
        x[r] = acc / a.at(r, r);
    }
    return x;
}

} // namespace clockwork
