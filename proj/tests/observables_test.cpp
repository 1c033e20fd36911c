#include <doctest.h>

#include <cmath>
#include <cstring>

#include "qkr/core.hpp"
#include "qkr/observables.hpp"

using namespace qkr;

TEST_CASE("probability of a delta state") {
    const auto lat = make_lattice(-8, 8);
    const auto p = probability(delta_state(lat, 3));
    double sum = 0.0;
    for (double v : p) sum += v;
    CHECK(sum == 1.0);
    CHECK(p[static_cast<size_t>(lat.index_of(3))] == 1.0);
}

TEST_CASE("moments of delta states are the site index and its square") {
    const auto lat = make_lattice(-16, 16);
    CHECK(moment1(delta_state(lat, 0)) == 0.0);
    CHECK(moment1(delta_state(lat, 7)) == 7.0);
    CHECK(moment2(delta_state(lat, 0)) == 0.0);
    CHECK(moment2(delta_state(lat, 3)) == 9.0);
    CHECK(variance(delta_state(lat, 5)) == 0.0);
}

TEST_CASE("centered gaussian has vanishing first moment and near-unit variance") {
    const auto lat = make_lattice(-64, 64);
    const auto state = gaussian_state(lat, {1.0, 1.234, 0});
    CHECK(std::abs(moment1(state)) <= 1e-12);

    // Independent direct sum over the renormalized discrete weights.
    double z = 1.0, m2 = 0.0;
    for (int j = 1; j <= 64; ++j) {
        const double w = std::exp(-j * j / 2.0);
        z += 2.0 * w;
        m2 += 2.0 * w * j * j;
    }
    const double expected = m2 / z;
    CHECK(expected == doctest::Approx(0.9999997887677281).epsilon(1e-12));
    CHECK(variance(state) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("moments are invariant under a global phase") {
    const auto lat = make_lattice(-64, 64);
    auto state = gaussian_state(lat, {2.0, 0.4, 1});
    const double m1 = moment1(state), m2 = moment2(state);
    const cplx phase{std::cos(0.9), std::sin(0.9)};
    for (auto& a : state.amplitudes) a *= phase;
    CHECK(std::abs(moment1(state) - m1) <= 1e-15 * std::max(1.0, std::abs(m1)));
    CHECK(std::abs(moment2(state) - m2) <= 1e-15 * std::max(1.0, m2));
}

TEST_CASE("energy and angular momentum are scaled moments") {
    const auto lat = make_lattice(-16, 16);
    const auto state = delta_state(lat, 3);
    CHECK(energy(state, 1.0) == moment2(state));
    CHECK(energy(state, 2.0) == 2.0 * moment2(state));
    CHECK(angular_momentum(state, 1.0) == moment1(state));
    CHECK(angular_momentum(state, 0.5) == 1.5);
}

TEST_CASE("tail_mass counts the outermost sites") {
    const auto lat = make_lattice(-50, 50);
    CHECK(tail_mass(delta_state(lat, 0), 10) == 0.0);

    const auto uniform = modulated_state(lat, [](int) { return 1.0; }, 0.0);
    for (int margin : {1, 5, 20})
        CHECK(tail_mass(uniform, margin) ==
              doctest::Approx(2.0 * margin / lat.size()).epsilon(1e-12));

    CHECK_THROWS_AS(tail_mass(uniform, -1), std::invalid_argument);
    CHECK_THROWS_AS(tail_mass(uniform, 51), std::invalid_argument);
}

TEST_CASE("reductions are bitwise reproducible over a huge dynamic range") {
    const auto lat = make_lattice(-50000, 50000);
    WaveState state;
    state.lattice = lat;
    state.amplitudes.resize(static_cast<size_t>(lat.size()));
    for (int i = 0; i < lat.size(); ++i) {
        // magnitudes sweep from ~1e-150 to ~1 deterministically
        const double mag = std::exp(-345.0 * ((i * 2654435761u % 100001u) / 100000.0));
        state.amplitudes[static_cast<size_t>(i)] = {mag, -0.5 * mag};
    }
    const double m2_a = moment2(state);
    const double m2_b = moment2(state);
    const double n_a = norm(state);
    const double n_b = norm(state);
    CHECK(std::memcmp(&m2_a, &m2_b, sizeof m2_a) == 0);
    CHECK(std::memcmp(&n_a, &n_b, sizeof n_a) == 0);
    CHECK(m2_a > 0.0);
}
