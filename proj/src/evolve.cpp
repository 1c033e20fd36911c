#include "qkr/evolve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qkr/bessel.hpp"
#include "qkr/observables.hpp"
#include "phases.hpp"

namespace qkr {

namespace detail {

std::vector<cplx> free_phases(const Lattice& lattice, const ResonanceParams& params) {
    const long long p = params.p;
    const long long q = params.q;

    // One phase per residue class s = p*l^2 mod q.
    std::vector<cplx> residue_phase(static_cast<size_t>(q));
    for (long long s = 0; s < q; ++s) {
        cplx v;
        if (4 * s % q == 0) {
            // s/q in {0, 1/4, 1/2, 3/4}: exact quarter turns
            switch (4 * s / q) {
                case 0: v = {1.0, 0.0}; break;
                case 1: v = {0.0, -1.0}; break;
                case 2: v = {-1.0, 0.0}; break;
                default: v = {0.0, 1.0}; break;
            }
        } else {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(q);
            v = {std::cos(angle), std::sin(angle)};
        }
        residue_phase[static_cast<size_t>(s)] = v;
    }

    std::vector<cplx> phases(static_cast<size_t>(lattice.size()));
    for (int i = 0; i < lattice.size(); ++i) {
        const long long l = lattice.l_of(i);
        const long long r = ((l % q) + q) % q;
        const long long s = (p * ((r * r) % q)) % q;
        phases[static_cast<size_t>(i)] = residue_phase[static_cast<size_t>(s)];
    }
    return phases;
}

namespace {

// out[l] = sum_{m=-W..W} coeff[|m|] * in[l+m], clipped to the array bounds.
// The inner sum runs in a fixed order, so the result does not depend on the
// thread count.
void apply_banded(const cplx* in, cplx* out, int n, const std::vector<cplx>& coeff,
                  bool parallel) {
    const int w = static_cast<int>(coeff.size()) - 1;
#pragma omp parallel for schedule(static) if (parallel)
    for (int l = 0; l < n; ++l) {
        const int m_lo = std::max(-w, -l);
        const int m_hi = std::min(w, n - 1 - l);
        cplx acc{0.0, 0.0};
        for (int m = m_lo; m <= m_hi; ++m)
            acc += coeff[static_cast<size_t>(m < 0 ? -m : m)] * in[l + m];
        out[l] = acc;
    }
}

// Combined kick coefficients c_m = i^{-m} J_m(x); even in m.
std::vector<cplx> kick_coefficients(const std::vector<double>& band) {
    std::vector<cplx> coeff(band.size());
    for (size_t m = 0; m < band.size(); ++m)
        coeff[m] = kInvPowI[m & 3] * band[m];
    return coeff;
}

// Bessel band for argument x, trimmed of trailing flushed zeros.
std::vector<double> kick_band(double x) {
    auto values = bessel_row(x, kick_band_width(x)).values;
    while (values.size() > 1 && values.back() == 0.0) values.pop_back();
    return values;
}

} // namespace
} // namespace detail

int kick_band_width(double x) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("kick_band_width: argument must be finite and nonnegative");
    return static_cast<int>(std::ceil(x)) + 40 + static_cast<int>(std::ceil(10.0 * std::cbrt(x)));
}

StepOperator build_step_operator(const Lattice& lattice, const ResonanceParams& params) {
    StepOperator op;
    op.lattice = lattice;
    op.params = make_resonance(params.p, params.q, params.kappa);
    op.band = detail::kick_band(params.kappa);
    op.band_width = static_cast<int>(op.band.size()) - 1;
    op.free_phase = detail::free_phases(lattice, op.params);
    return op;
}

namespace {

WaveState apply_step(const WaveState& state, const StepOperator& op, StepStats* stats,
                     bool parallel) {
    if (state.lattice != op.lattice)
        throw std::invalid_argument("step: state and operator lattices differ");
    const int n = static_cast<int>(state.amplitudes.size());

    std::vector<cplx> kicked(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        kicked[static_cast<size_t>(i)] = op.free_phase[static_cast<size_t>(i)] * state.amplitudes[static_cast<size_t>(i)];

    WaveState out;
    out.lattice = state.lattice;
    out.amplitudes.resize(static_cast<size_t>(n));
    const auto coeff = detail::kick_coefficients(op.band);
    detail::apply_banded(kicked.data(), out.amplitudes.data(), n, coeff, parallel);

    if (stats) {
        const double leaked = norm(state) - norm(out);
        stats->leaked_mass += leaked > 0.0 ? leaked : 0.0;
    }
    return out;
}

} // namespace

WaveState step(const WaveState& state, const StepOperator& op, StepStats* stats) {
    return apply_step(state, op, stats, true);
}

WaveState step_reference(const WaveState& state, const StepOperator& op, StepStats* stats) {
    return apply_step(state, op, stats, false);
}

WaveState evolve(const WaveState& state, const ResonanceParams& params, int n,
                 const StepRecorder& recorder, StepStats* stats) {
    if (n < 0) throw std::invalid_argument("evolve: step count must be nonnegative");
    WaveState current = state;
    if (n == 0) return current;
    const StepOperator op = build_step_operator(state.lattice, params);
    for (int k = 1; k <= n; ++k) {
        current = step(current, op, stats);
        if (recorder) recorder(k, current);
    }
    return current;
}

WaveState closed_form_primary(const WaveState& state0, double kappa, int n) {
    if (n < 0) throw std::invalid_argument("closed_form_primary: step count must be nonnegative");
    if (!std::isfinite(kappa) || kappa < 0.0)
        throw std::invalid_argument("closed_form_primary: kappa must be finite and nonnegative");
    WaveState out;
    out.lattice = state0.lattice;
    out.amplitudes.resize(state0.amplitudes.size());
    // a_l(n) = sum_m i^{-m} J_m(n*kappa) a_{l+m}(0): one banded convolution
    // with argument n*kappa (J_0(0) = delta reproduces the input at n = 0).
    const auto coeff = detail::kick_coefficients(detail::kick_band(n * kappa));
    detail::apply_banded(state0.amplitudes.data(), out.amplitudes.data(),
                         static_cast<int>(state0.amplitudes.size()), coeff, true);
    return out;
}

} // namespace qkr
