#include <doctest.h>

#include <cmath>

#include "clockwork/errors.hpp"
#include "clockwork/markov.hpp"
#include "clockwork/rng.hpp"
#include "test_support.hpp"

using namespace clockwork;
using testsupport::cofactor_steady_state;
using testsupport::cycle_generator;
using testsupport::random_generator3;
using testsupport::symmetric_generator;

TEST_CASE("validate_generator recomputes diagonals and exit rates") {
    const Generator g = symmetric_generator(1.0);
    for (int s = 0; s < 3; ++s) CHECK(g.exit_rate(s) == 2.0);

    // Column sums vanish exactly for the validated matrix.
    for (int c = 0; c < 3; ++c) {
        double colsum = 0.0;
        for (int r = 0; r < 3; ++r) colsum += g.matrix().at(r, c);
        CHECK(colsum == 0.0);
    }
}

TEST_CASE("validate_generator rejects bad input") {
    Matrix raw(3, 3);
    raw.at(1, 0) = -0.1;
    raw.at(2, 1) = 1.0;
    raw.at(0, 2) = 1.0;
    CHECK_THROWS_AS(validate_generator(raw), NegativeRate);

    Matrix absorbing(3, 3);
    absorbing.at(1, 0) = 1.0;  // column 1 and 2...
    absorbing.at(2, 0) = 1.0;
    absorbing.at(0, 1) = 1.0;
    absorbing.at(0, 2) = 1.0;
    absorbing.at(2, 1) = 1.0;
    // column 2 keeps two outgoing rates; zero out column 1 instead
    Matrix zero_col(3, 3);
    zero_col.at(1, 0) = 1.0;
    zero_col.at(0, 2) = 1.0;
    zero_col.at(1, 2) = 1.0;
    CHECK_THROWS_AS(validate_generator(zero_col), AbsorbingState);

    CHECK_THROWS_AS(validate_generator(Matrix(1, 1)), DataError);
}

TEST_CASE("steady state of symmetric and cycle generators is uniform") {
    for (const Generator& g : {symmetric_generator(3.7), cycle_generator(2.2)}) {
        const Distribution p = steady_state(g);
        for (int i = 0; i < 3; ++i) {
            CHECK(p.p[static_cast<std::size_t>(i)] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("steady state matches detailed balance on a reversible chain") {
    // Chain 0 <-> L <-> R with ratios p_L/p_0 = 2, p_R/p_L = 3.
    Matrix raw(3, 3);
    raw.at(kStateL, kState0) = 2.0;
    raw.at(kState0, kStateL) = 1.0;
    raw.at(kStateR, kStateL) = 3.0;
    raw.at(kStateL, kStateR) = 1.0;
    const Generator g = validate_generator(raw);
    const Distribution p = steady_state(g);
    CHECK(p.p[kState0] == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(p.p[kStateR] == doctest::Approx(6.0 / 9.0).epsilon(1e-12));
    CHECK(p.p[kStateL] == doctest::Approx(2.0 / 9.0).epsilon(1e-12));

    const auto oracle = cofactor_steady_state(g.matrix());
    for (int i = 0; i < 3; ++i) {
        CHECK(p.p[static_cast<std::size_t>(i)] ==
              doctest::Approx(oracle[static_cast<std::size_t>(i)]).epsilon(1e-12));
    }
}

TEST_CASE("steady state: residual, positivity, scale invariance") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const Generator g = random_generator3(rng, 1.0, 100.0);
        const Distribution p = steady_state(g);
        p.validate();

        double residual = 0.0;
        for (int r = 0; r < 3; ++r) {
            double acc = 0.0;
            for (int c = 0; c < 3; ++c) acc += g.matrix().at(r, c) * p.p[static_cast<std::size_t>(c)];
            residual = std::max(residual, std::fabs(acc));
        }
        CHECK(residual <= 1e-10);

        const auto oracle = cofactor_steady_state(g.matrix());
        for (int i = 0; i < 3; ++i) {
            CHECK(p.p[static_cast<std::size_t>(i)] ==
                  doctest::Approx(oracle[static_cast<std::size_t>(i)]).epsilon(1e-10));
        }

        // Uniform rate rescaling leaves the stationary state unchanged.
        Matrix scaled = g.matrix();
        for (double& v : scaled.data()) v *= 17.0;
        const Distribution q = steady_state(validate_generator(scaled));
        for (int i = 0; i < 3; ++i) {
            CHECK(q.p[static_cast<std::size_t>(i)] ==
                  doctest::Approx(p.p[static_cast<std::size_t>(i)]).epsilon(1e-12));
        }
    }
}

TEST_CASE("reducible generators are rejected") {
    // No transition ever enters state R: strongly connected fails.
    Matrix raw(3, 3);
    raw.at(kStateL, kState0) = 1.0;
    raw.at(kState0, kStateL) = 1.0;
    raw.at(kState0, kStateR) = 1.0;
    const Generator g = validate_generator(raw);
    CHECK_FALSE(g.irreducible());
    CHECK_THROWS_AS(steady_state(g), Reducible);
}

TEST_CASE("exit rates") {
    const Generator sym = symmetric_generator(5.0);
    CHECK(exit_rates(sym) == std::vector<double>{10.0, 10.0, 10.0});

    const Generator cyc = cycle_generator(4.0);
    CHECK(exit_rates(cyc) == std::vector<double>{4.0, 4.0, 4.0});

    Matrix raw(3, 3);
    raw.at(kStateR, kState0) = 10.0;
    raw.at(kStateL, kState0) = 30.0;
    raw.at(kState0, kStateR) = 1.0;
    raw.at(kState0, kStateL) = 1.0;
    const Generator g = validate_generator(raw);
    CHECK(g.exit_rate(kState0) == 40.0);
}

TEST_CASE("state names round-trip") {
    CHECK(state_name(kState0, 3) == "0");
    CHECK(state_name(kStateR, 3) == "R");
    CHECK(state_name(kStateL, 3) == "L");
    CHECK(state_index("L", 3) == kStateL);
    CHECK(state_index("2", 4) == 2);
    CHECK_THROWS_AS(state_index("Q", 3), DataError);
}
