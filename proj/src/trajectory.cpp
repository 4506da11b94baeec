#include "clockwork/trajectory.hpp"

#include <cmath>
#include <cstddef>

#include "clockwork/errors.hpp"
#include "clockwork/rng.hpp"

namespace clockwork {

void JumpRecord::validate() const {
    if (states.size() != times.size() + 1) {
        throw DataError("jump record: states/times length mismatch");
    }
    if (!(duration > 0.0) && !times.empty()) {
        throw DataError("jump record: nonpositive duration");
    }
    double prev = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!(times[k] > prev) || times[k] > duration) {
            throw DataError("jump record: times not strictly increasing in (0, T]");
        }
        if (states[k + 1] == states[k]) {
            throw DataError("jump record: consecutive states equal");
        }
        prev = times[k];
    }
}

std::string channel_name(Channel c) {
    switch (c) {
        case Channel::dc: return "dc";
        case Channel::rf_x: return "rf_x";
        case Channel::rf_y: return "rf_y";
        case Channel::rf_pca: return "rf_pca";
    }
    return "dc";
}

Channel channel_from_name(const std::string& name) {
    if (name == "dc") return Channel::dc;
    if (name == "rf_x") return Channel::rf_x;
    if (name == "rf_y") return Channel::rf_y;
    if (name == "rf_pca") return Channel::rf_pca;
    throw DataError("unknown channel: " + name);
}

JumpRecord sample_trajectory(const Generator& g, const Distribution& p0,
                             double duration, std::uint64_t seed) {
    if (!(duration > 0.0)) throw DataError("sample_trajectory: duration must be > 0");
    if (p0.n() != g.n()) throw DataError("sample_trajectory: p0 size mismatch");
    p0.validate();
    if (!g.irreducible()) throw Reducible("sample_trajectory: reducible generator");

    const int n = g.n();
    Rng rng(seed);

    JumpRecord rec;
    rec.duration = duration;

    int state = rng.categorical(p0.p, 1.0);
    rec.states.push_back(state);

    std::vector<double> column(static_cast<std::size_t>(n));
    double t = 0.0;
    for (;;) {
        const double exit = g.exit_rate(state);
        if (!(exit > 0.0)) {
            throw DegenerateGenerator("state " + state_name(state, n) +
                                      " has zero exit rate");
        }
        t += rng.exponential(exit);
        if (t > duration) break;
        for (int j = 0; j < n; ++j) {
            column[static_cast<std::size_t>(j)] = j == state ? 0.0 : g.rate(j, state);
        }
        state = rng.categorical(column, exit);
        rec.states.push_back(state);
        rec.times.push_back(t);
    }
    return rec;
}

std::vector<std::uint8_t> states_at_samples(const JumpRecord& rec, double dt) {
    if (!(dt > 0.0)) throw DataError("states_at_samples: dt must be > 0");
    const auto n_samples = static_cast<std::size_t>(std::floor(rec.duration / dt));
    std::vector<std::uint8_t> out(n_samples);
    std::size_t jump = 0;
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double t = static_cast<double>(k) * dt;
        while (jump < rec.times.size() && rec.times[jump] <= t) ++jump;
        out[k] = static_cast<std::uint8_t>(rec.states[jump]);
    }
    return out;
}

TelegraphTrace synthesize_trace(const JumpRecord& rec, const LevelTruth& truth,
                                double dt, std::uint64_t seed) {
    rec.validate();
    if (!(dt > 0.0)) throw DataError("synthesize_trace: dt must be > 0");

    const std::vector<std::uint8_t> states = states_at_samples(rec, dt);
    TelegraphTrace trace;
    trace.dt = dt;
    trace.samples.resize(states.size());

    Rng rng(seed);
    for (std::size_t k = 0; k < states.size(); ++k) {
        double v = truth.level_values[states[k]];
        if (truth.noise_sigma > 0.0) v += truth.noise_sigma * rng.normal();
        trace.samples[k] = v;
    }
    return trace;
}

} // namespace clockwork
