#ifndef CLOCKWORK_MARKOV_HPP
#define CLOCKWORK_MARKOV_HPP

#include <string>
#include <vector>

#include "clockwork/linalg.hpp"

namespace clockwork {

// Three-state clock labels: index 0 is the empty state, 1 the right dot,
// 2 the left dot, matching the occupation ordering (p_0, p_R, p_L).
inline constexpr int kState0 = 0;
inline constexpr int kStateR = 1;
inline constexpr int kStateL = 2;

/// "0", "R", "L" for the three-state clock; plain indices otherwise.
std::string state_name(int state, int n_states);
int state_index(const std::string& name, int n_states);

/// Validated continuous-time Markov generator. Entry (j, i) of the matrix is
/// the transition rate i -> j in Hz; each diagonal holds minus the column's
/// off-diagonal sum, so columns sum to zero exactly.
class Generator {
public:
    int n() const { return m_.rows(); }
    /// Rate from `from` to `to` (off-diagonal entry, >= 0).
    double rate(int to, int from) const { return to == from ? 0.0 : m_.at(to, from); }
    /// Exit rate Gamma_s = -M_ss.
    double exit_rate(int s) const { return -m_.at(s, s); }
    const Matrix& matrix() const { return m_; }
    bool irreducible() const;

private:
    friend Generator validate_generator(const Matrix& raw);
    explicit Generator(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

/// Probability vector over states; entries sum to one.
struct Distribution {
    std::vector<double> p;

    int n() const { return static_cast<int>(p.size()); }
    void validate() const;
};

/// Checks rates (finite, nonnegative, no absorbing column) and recomputes
/// diagonals from the off-diagonal sums. The input diagonal is ignored.
Generator validate_generator(const Matrix& raw);

/// Stationary distribution: solves M p = 0 with sum(p) = 1 by elimination
/// with partial pivoting; residual |M p|_inf <= 1e-10 guaranteed.
Distribution steady_state(const Generator& g);

/// Exit rates Gamma_s for every state.
std::vector<double> exit_rates(const Generator& g);

} // namespace clockwork

#endif
