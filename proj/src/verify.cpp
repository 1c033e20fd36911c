#include "qkr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "qkr/bessel.hpp"
#include "qkr/evolve.hpp"
#include "qkr/experiments.hpp"
#include "qkr/observables.hpp"
#include "qkr/theory.hpp"

namespace qkr {

namespace {

constexpr double kPi = std::numbers::pi;

double max_amp_diff(const WaveState& a, const WaveState& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.amplitudes.size(); ++i)
        worst = std::max(worst, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    return worst;
}

// Deterministic random normalized state confined to |l| <= support, so
// nothing reaches the lattice edges during the checks that use it.
WaveState random_interior_state(const Lattice& lattice, int support, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    WaveState state;
    state.lattice = lattice;
    state.amplitudes.assign(static_cast<size_t>(lattice.size()), cplx{0.0, 0.0});
    for (int l = -support; l <= support; ++l) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        state.amplitudes[static_cast<size_t>(lattice.index_of(l))] = cplx{re, im};
    }
    return normalized(std::move(state));
}

VerifyResult check(const std::string& name, double measured, double bound) {
    return {name, measured, bound, measured <= bound};
}

} // namespace

std::vector<VerifyResult> run_verification() {
    std::vector<VerifyResult> results;

    // Special functions against frozen power-series references.
    results.push_back(check("bessel J0(1) vs series reference",
                            std::abs(bessel_j(0, 1.0) - 0.76519768655796655), 1e-13));
    results.push_back(check("bessel J1(0.25) vs series reference",
                            std::abs(bessel_j(1, 0.25) - 0.12402597732272692), 1e-13));
    {
        const double x = 125.0;
        const auto row = bessel_row(x, kick_band_width(x));
        double sum = row.values[0] * row.values[0];
        for (size_t n = 1; n < row.values.size(); ++n) sum += 2.0 * row.values[n] * row.values[n];
        results.push_back(check("bessel Neumann sum rule x=125", std::abs(1.0 - sum), 1e-12));
        double worst = 0.0;
        for (int n = 1; n <= 165; ++n) {
            const double r = row.values[static_cast<size_t>(n - 1)] +
                             row.values[static_cast<size_t>(n + 1)] -
                             (2.0 * n / x) * row.values[static_cast<size_t>(n)];
            worst = std::max(worst, std::abs(r) /
                                        std::max(1.0, std::abs(row.values[static_cast<size_t>(n)])));
        }
        results.push_back(check("bessel recurrence residual x=125", worst, 1e-10));
    }

    // Pairwise evolver agreement, primary resonance.
    {
        const auto params = make_resonance(1, 1, 0.25);
        const Lattice lattice = make_lattice(-120, 120);
        const auto init = gaussian_state(lattice, {1.0, kPi / 2, 0});
        const int n = 100;
        const auto banded = evolve(init, params, n);
        results.push_back(check("closed form vs banded, gaussian n=100",
                                max_amp_diff(banded, closed_form_primary(init, params.kappa, n)),
                                1e-10));
        SpectralStepper spectral(lattice, params);
        WaveState s = init;
        for (int k = 0; k < n; ++k) s = spectral.step(s);
        results.push_back(check("spectral vs banded, gaussian n=100", max_amp_diff(banded, s), 1e-10));
    }
    {
        const auto params = make_resonance(1, 3, 0.25);
        const Lattice lattice = make_lattice(-120, 120);
        const auto init = delta_state(lattice, 0);
        const int n = 100;
        const auto banded = evolve(init, params, n);
        SpectralStepper spectral(lattice, params);
        WaveState s = init;
        for (int k = 0; k < n; ++k) s = spectral.step(s);
        results.push_back(
            check("spectral vs banded, delta p/q=1/3 n=100", max_amp_diff(banded, s), 1e-10));
    }

    // Antiresonance: two kicks are the identity.
    for (double kappa : {0.25, 1.0, 3.0}) {
        const auto params = make_resonance(1, 2, kappa);
        const Lattice lattice = make_lattice(-256, 256);
        const auto init = random_interior_state(lattice, 100, 20240521);
        const auto after = evolve(init, params, 2);
        char name[64];
        std::snprintf(name, sizeof name, "antiresonance revival kappa=%.2f", kappa);
        results.push_back(check(name, max_amp_diff(after, init), 1e-12));
    }

    // Exact moment identities against the banded simulation.
    for (double theta0 : {0.0, kPi / 4, kPi / 2}) {
        const auto params = make_resonance(1, 1, 0.25);
        const GaussianSpec spec{1.0, theta0, 0};
        const int n_steps = 500;
        const int hw = auto_half_width(spec, params, n_steps);
        RunOptions opts;
        opts.half_width = hw;
        opts.record_every = 10;
        const auto series = run_moment_series(spec, params, n_steps, opts);
        const auto init = gaussian_state(make_lattice(-hw, hw), spec);
        double worst1 = 0.0, worst2 = 0.0;
        for (const auto& e : series.entries) {
            const double p1 = predict_m1(init, params.kappa, e.n);
            const double p2 = predict_m2(init, params.kappa, e.n);
            worst1 = std::max(worst1, std::abs(e.m1 - p1) / std::max(1.0, std::abs(p1)));
            worst2 = std::max(worst2, std::abs(e.m2 - p2) / std::max(1.0, std::abs(p2)));
        }
        char name[96];
        std::snprintf(name, sizeof name, "moment identity M1, theta0=%.4f", theta0);
        results.push_back(check(name, worst1, 1e-6));
        std::snprintf(name, sizeof name, "moment identity M2, theta0=%.4f", theta0);
        results.push_back(check(name, worst2, 1e-6));
    }

    // Gaussian closed form (squared-sigma exponents) against the exact sums.
    {
        const double kappa = 0.25;
        const GaussianSpec spec{10.0, kPi / 2, 0};
        const Lattice lattice = make_lattice(-200, 200);
        const auto init = gaussian_state(lattice, spec);
        const double exact = predict_m1(init, kappa, 100);
        const double closed = gaussian_moments(spec, kappa, 100, ExponentMode::squared_sigma).m1;
        results.push_back(check("gaussian closed form vs exact sums, sigma0=10",
                                std::abs(closed - exact) / std::abs(exact), 1e-3));
    }

    // Traveling wavepacket: first moment after 500 kicks.
    {
        const auto params = make_resonance(1, 1, 0.25);
        const GaussianSpec spec{1.0, kPi / 2, 0};
        RunOptions opts;
        opts.record_every = 500;
        const auto series = run_moment_series(spec, params, 500, opts);
        const double m1 = series.entries.back().m1;
        results.push_back(check("wavepacket drift M1(500) vs -110.3 (1%)",
                                std::abs(m1 + 110.3) / 110.3, 0.01));
        results.push_back(check("wavepacket drift direction (M1<0)", m1 < 0.0 ? 0.0 : 1.0, 0.5));
    }

    return results;
}

bool print_verification(std::ostream& os, const std::vector<VerifyResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        char line[160];
        std::snprintf(line, sizeof line, "%s  %-46s  measured %.3e  bound %.3e\n",
                      r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured, r.bound);
        os << line;
        all = all && r.passed;
    }
    os << (all ? "verification: all checks passed\n" : "verification: FAILURES present\n");
    return all;
}

} // namespace qkr
