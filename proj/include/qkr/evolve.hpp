#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qkr/core.hpp"

// One-kick-period propagators. Three interchangeable routes are kept on
// purpose: the banded matrix map (production path, OpenMP-parallel with a
// serial reference), the one-shot closed-form propagator valid at the
// primary resonance, and a spectral split-step evolver. Their mutual
// agreement is the main correctness check of the whole artifact.

namespace qkr {

// Precomputed one-period unitary U_{lj} = i^{-(j-l)} e^{-i 2pi (p/q) j^2} J_{j-l}(kappa)
// in banded form. band[m] = J_m(kappa) for m = 0..band_width; negative orders
// come from the symmetry of the combined coefficient i^{-m} J_m, which is even
// in m. free_phase[i] = e^{-i 2pi (p/q) l^2} for l = lattice.l_of(i), built
// from exact integer residues p*l^2 mod q.
struct StepOperator {
    Lattice lattice;
    ResonanceParams params;
    std::vector<double> band;
    int band_width = 0;
    std::vector<cplx> free_phase;
};

// Per-step truncation accounting: probability that the infinite-lattice map
// would have moved past the lattice edges and that we drop instead.
struct StepStats {
    double leaked_mass = 0.0;
};

// Band half-width for a kick of argument x; chosen so the out-of-band
// Neumann mass sum_{|m|>W} J_m(x)^2 stays below 1e-28.
int kick_band_width(double x);

StepOperator build_step_operator(const Lattice& lattice, const ResonanceParams& params);

// out_l = sum_{|m|<=W} i^{-m} J_m(kappa) * free_phase[l+m] * a_{l+m}.
// Fixed summation order per output element, so the result is bitwise
// independent of the thread count.
WaveState step(const WaveState& state, const StepOperator& op, StepStats* stats = nullptr);

// Serial reference for the banded kernel; must match step() bitwise.
WaveState step_reference(const WaveState& state, const StepOperator& op,
                         StepStats* stats = nullptr);

using StepRecorder = std::function<void(int step_index, const WaveState&)>;

// Applies the banded map n times. The recorder, when given, sees the state
// after every step. stats accumulates leaked mass over all steps.
WaveState evolve(const WaveState& state, const ResonanceParams& params, int n,
                 const StepRecorder& recorder = {}, StepStats* stats = nullptr);

// Primary-resonance closed form a_l(n) = sum_j (-i)^{l-j} a_j(0) J_{l-j}(n*kappa),
// evaluated as a single banded convolution with argument n*kappa.
// Rejects p/q != 1 by construction (takes kappa only).
WaveState closed_form_primary(const WaveState& state0, double kappa, int n);

// Split-step route: free phases in momentum space, DFT to the angle grid,
// multiply by e^{-i kappa cos theta_k}, DFT back. The angle grid size equals
// the lattice size, so momentum is periodic mod the lattice (aliasing): the
// result is trustworthy only while the edge occupation stays tiny, and the
// stepper records a warning whenever it exceeds 1e-8 on entry.
class SpectralStepper {
public:
    SpectralStepper(const Lattice& lattice, const ResonanceParams& params);
    ~SpectralStepper();
    SpectralStepper(SpectralStepper&&) noexcept;
    SpectralStepper& operator=(SpectralStepper&&) noexcept;
    SpectralStepper(const SpectralStepper&) = delete;
    SpectralStepper& operator=(const SpectralStepper&) = delete;

    WaveState step(const WaveState& state);

    // Probability mass within one kick band width of the lattice edges,
    // measured on the most recent input state.
    double last_edge_occupation() const;
    int warning_count() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Convenience single-shot wrapper (builds plans each call).
WaveState spectral_step(const WaveState& state, const ResonanceParams& params);

} // namespace qkr
