#ifndef CLOCKWORK_TRAJECTORY_HPP
#define CLOCKWORK_TRAJECTORY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "clockwork/markov.hpp"

namespace clockwork {

/// One stochastic trajectory: the state sequence (s_0 ... s_m) and the jump
/// times (t_1 ... t_m), strictly increasing within (0, duration].
struct JumpRecord {
    std::vector<int> states;
    std::vector<double> times;
    double duration = 0.0;

    int jumps() const { return static_cast<int>(times.size()); }
    void validate() const;
};

enum class Channel { dc, rf_x, rf_y, rf_pca };

std::string channel_name(Channel c);
Channel channel_from_name(const std::string& name);

/// Uniformly sampled sensor signal. dc readouts carry pA values, rf readouts
/// mV; only the thermo module cares about the distinction.
struct TelegraphTrace {
    std::vector<double> samples;
    double dt = 0.0;
    Channel channel = Channel::dc;

    double duration() const { return dt * static_cast<double>(samples.size()); }
};

/// Ground-truth readout model used for synthesis: one signal value per state
/// plus white Gaussian noise.
struct LevelTruth {
    std::array<double, 3> level_values{};  // indexed by state 0, R, L
    double noise_sigma = 0.0;
};

/// Exact stochastic simulation of the master equation: exponential waiting
/// times Exp(Gamma_i), successor j with probability Gamma_ji / Gamma_i.
/// Deterministic for a given seed.
JumpRecord sample_trajectory(const Generator& g, const Distribution& p0,
                             double duration, std::uint64_t seed);

/// Noisy three-level telegraph signal sampled every dt from the record;
/// floor(duration/dt) samples. Deterministic for a given seed.
TelegraphTrace synthesize_trace(const JumpRecord& rec, const LevelTruth& truth,
                                double dt, std::uint64_t seed);

/// Noise-free state-at-sample sequence (perfect readout at resolution dt).
std::vector<std::uint8_t> states_at_samples(const JumpRecord& rec, double dt);

} // namespace clockwork

#endif
