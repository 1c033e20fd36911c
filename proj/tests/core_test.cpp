#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qkr/core.hpp"
#include "qkr/observables.hpp"

using namespace qkr;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("make_lattice validates its range") {
    const auto lat = make_lattice(-512, 512);
    CHECK(lat.size() == 1025);
    CHECK(make_lattice(-1, 1).size() == 3);
    CHECK_THROWS_AS(make_lattice(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_lattice(0, 1), std::invalid_argument); // only 2 sites
}

TEST_CASE("make_resonance validates p, q and kappa") {
    const auto params = make_resonance(1, 3, 0.25);
    CHECK(params.p == 1);
    CHECK(params.q == 3);
    CHECK_THROWS_AS(make_resonance(2, 4, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(make_resonance(0, 1, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(make_resonance(1, 1, -1.0), std::invalid_argument);
}

TEST_CASE("gaussian_state weight ratio and normalization") {
    const auto lat = make_lattice(-64, 64);
    const auto state = gaussian_state(lat, {1.0, 0.0, 0});
    const auto p = probability(state);
    const size_t c = static_cast<size_t>(lat.index_of(0));
    // |a_0|^2 / |a_1|^2 = e^{1/2} independent of normalization
    CHECK(p[c] / p[c + 1] == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
    CHECK(std::abs(norm(state) - 1.0) <= 1e-14);
}

TEST_CASE("gaussian_state modulus ignores theta0 and is symmetric about the center") {
    const auto lat = make_lattice(-64, 64);
    const auto flat = gaussian_state(lat, {1.0, 0.0, 0});
    const auto tilted = gaussian_state(lat, {1.0, kPi / 2, 0});
    for (size_t i = 0; i < flat.amplitudes.size(); ++i)
        CHECK(std::abs(std::abs(tilted.amplitudes[i]) - std::abs(flat.amplitudes[i])) <= 1e-15);

    const auto off = gaussian_state(lat, {2.5, 0.7, 5});
    for (int k = 1; k <= 20; ++k) {
        const double lo = std::abs(off.amplitudes[static_cast<size_t>(lat.index_of(5 - k))]);
        const double hi = std::abs(off.amplitudes[static_cast<size_t>(lat.index_of(5 + k))]);
        CHECK(std::abs(lo - hi) <= 1e-15);
    }
}

TEST_CASE("gaussian_state rejects lattices without a 6 sigma margin") {
    const auto lat = make_lattice(-10, 10);
    CHECK_THROWS_AS(gaussian_state(lat, {2.0, 0.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_state(lat, {1.0, 0.0, 6}), std::invalid_argument);
    CHECK_NOTHROW(gaussian_state(lat, {1.0, 0.0, 0}));
    CHECK_THROWS_AS(gaussian_state(lat, {-1.0, 0.0, 0}), std::invalid_argument);
}

TEST_CASE("discrete normalization approaches the continuum constant for sigma0 >= 1") {
    for (double sigma0 : {1.0, 2.0, 5.0, 10.0}) {
        double sum = 1.0;
        for (int j = 1; j <= static_cast<int>(40 * sigma0) + 10; ++j)
            sum += 2.0 * std::exp(-j * j / (2.0 * sigma0 * sigma0));
        const double continuum = sigma0 * std::sqrt(2.0 * kPi);
        CAPTURE(sigma0);
        CHECK(std::abs(sum - continuum) / continuum <= 1e-6);
    }
}

TEST_CASE("modulated_state covers delta, uniform and gaussian envelopes") {
    const auto lat = make_lattice(-32, 32);

    const auto delta = modulated_state(lat, [](int l) { return l == 0 ? 1.0 : 0.0; }, 0.8);
    CHECK(std::abs(delta.amplitudes[static_cast<size_t>(lat.index_of(0))] - cplx{1.0, 0.0}) <= 1e-15);
    CHECK(norm(delta) == doctest::Approx(1.0).epsilon(1e-14));

    const auto uniform =
        modulated_state(lat, [](int l) { return std::abs(l) <= 10 ? 1.0 : 0.0; }, 0.0);
    const auto p = probability(uniform);
    for (int l = -10; l <= 10; ++l)
        CHECK(p[static_cast<size_t>(lat.index_of(l))] == doctest::Approx(1.0 / 21).epsilon(1e-12));

    const double inv4s2 = 0.25;
    const auto via_modulated = modulated_state(
        lat, [&](int l) { return std::exp(-l * l * inv4s2); }, 0.3);
    const auto via_gaussian = gaussian_state(lat, {1.0, 0.3, 0});
    for (size_t i = 0; i < via_gaussian.amplitudes.size(); ++i)
        CHECK(std::abs(via_modulated.amplitudes[i] - via_gaussian.amplitudes[i]) <= 1e-15);

    CHECK_THROWS_AS(modulated_state(lat, [](int) { return 0.0; }, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(modulated_state(lat, [](int l) { return static_cast<double>(l); }, 0.0),
                    std::invalid_argument); // negative envelope
}

TEST_CASE("norm examples") {
    const auto lat = make_lattice(-4, 4);
    auto state = delta_state(lat, 2);
    CHECK(norm(state) == 1.0);
    state.amplitudes[static_cast<size_t>(lat.index_of(2))] = {0.5, 0.0};
    CHECK(norm(state) == 0.25);
    state.amplitudes[static_cast<size_t>(lat.index_of(2))] = {0.0, 0.0};
    CHECK(norm(state) == 0.0);
    CHECK_THROWS_AS(normalized(state), std::invalid_argument);
}
