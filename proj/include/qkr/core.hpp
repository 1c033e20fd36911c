#pragma once

#include <complex>
#include <functional>
#include <vector>

// Core state types for the resonant kicked-rotor simulator: the truncated
// angular-momentum lattice, the complex amplitude vector living on it, the
// rational resonance parameters, and the phase-modulated Gaussian initial
// conditions.

namespace qkr {

using cplx = std::complex<double>;

// Contiguous integer angular-momentum index range [l_min, l_max], inclusive.
// The physical lattice is infinite; truncation is ours, so every consumer
// that can leak probability across the edges reports it (see tail_mass and
// the step diagnostics).
struct Lattice {
    int l_min = 0;
    int l_max = 0;

    int size() const { return l_max - l_min + 1; }
    bool contains(int l) const { return l >= l_min && l <= l_max; }
    int index_of(int l) const { return l - l_min; }
    int l_of(int i) const { return l_min + i; }

    bool operator==(const Lattice&) const = default;
};

// amplitudes[i] = a_{l_min + i}
struct WaveState {
    Lattice lattice;
    std::vector<cplx> amplitudes;
};

// Resonant kick period tau = 2*pi*p/q with gcd(p,q) = 1, plus the
// dimensionless kick strength kappa. tau itself is never stored; every
// consumer works from the integer residues so the free-evolution phases
// stay exactly periodic in the site index.
struct ResonanceParams {
    int p = 1;
    int q = 1;
    double kappa = 0.0;
};

// Phase-modulated Gaussian envelope: |a_l|^2 is a discrete Gaussian with
// standard deviation sigma0 centered at l_center, and each amplitude carries
// the plane-wave phase e^{i*theta0*l}.
struct GaussianSpec {
    double sigma0 = 1.0;
    double theta0 = 0.0;
    int l_center = 0;
};

Lattice make_lattice(int l_min, int l_max);

// Validates positivity, coprimality and finiteness.
ResonanceParams make_resonance(int p, int q, double kappa);

// Discretely renormalized Gaussian wavepacket. Requires a 6*sigma0 margin
// between l_center and both lattice edges so the truncated tail is
// negligible at build time.
WaveState gaussian_state(const Lattice& lattice, const GaussianSpec& spec);

// General modulated state a_l = f(l) * e^{i*theta0*l}, renormalized.
// envelope must be nonnegative and not identically zero on the lattice.
WaveState modulated_state(const Lattice& lattice,
                          const std::function<double(int)>& envelope,
                          double theta0);

// Delta state a_{l0} = 1.
WaveState delta_state(const Lattice& lattice, int l0);

// Sum of |a_l|^2, compensated, low index to high.
double norm(const WaveState& state);

// Rescale to unit norm. Throws on a zero state.
WaveState normalized(WaveState state);

} // namespace qkr
