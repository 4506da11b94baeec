#ifndef CLOCKWORK_LINALG_HPP
#define CLOCKWORK_LINALG_HPP

#include <cstddef>
#include <vector>

namespace clockwork {

/// Dense row-major matrix. Small and value-typed; everything in this toolkit
/// is at most a handful of states wide.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Solves the square system A x = b by Gaussian elimination with partial
/// pivoting. Throws SingularMatrix when a pivot vanishes.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

} // namespace clockwork

#endif
