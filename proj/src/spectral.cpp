#include "qkr/evolve.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "qkr/observables.hpp"
#include "phases.hpp"

namespace qkr {

namespace {

// FFTW plan creation/destruction is not thread-safe.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

constexpr double kEdgeWarnThreshold = 1e-8;

} // namespace

struct SpectralStepper::Impl {
    Lattice lattice;
    ResonanceParams params;
    std::vector<cplx> free_phase;
    std::vector<cplx> kick_phase; // e^{-i kappa cos theta_k} on the angle grid
    int edge_margin = 0;
    double last_edge_occupation = 0.0;
    int warning_count = 0;

    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    ~Impl() {
        std::lock_guard<std::mutex> lock(plan_mutex());
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (buf) fftw_free(buf);
    }
};

SpectralStepper::SpectralStepper(const Lattice& lattice, const ResonanceParams& params)
    : impl_(std::make_unique<Impl>()) {
    impl_->lattice = lattice;
    impl_->params = make_resonance(params.p, params.q, params.kappa);
    impl_->free_phase = detail::free_phases(lattice, impl_->params);

    const int n = lattice.size();
    impl_->kick_phase.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n;
        const double arg = -params.kappa * std::cos(theta);
        impl_->kick_phase[static_cast<size_t>(k)] = {std::cos(arg), std::sin(arg)};
    }
    impl_->edge_margin = std::min(kick_band_width(params.kappa), (n - 1) / 2);

    if (params.kappa != 0.0) {
        std::lock_guard<std::mutex> lock(plan_mutex());
        impl_->buf = fftw_alloc_complex(static_cast<size_t>(n));
        impl_->fwd = fftw_plan_dft_1d(n, impl_->buf, impl_->buf, FFTW_FORWARD, FFTW_ESTIMATE);
        impl_->bwd = fftw_plan_dft_1d(n, impl_->buf, impl_->buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!impl_->fwd || !impl_->bwd) throw std::runtime_error("SpectralStepper: FFT plan failed");
    }
}

SpectralStepper::~SpectralStepper() = default;
SpectralStepper::SpectralStepper(SpectralStepper&&) noexcept = default;
SpectralStepper& SpectralStepper::operator=(SpectralStepper&&) noexcept = default;

WaveState SpectralStepper::step(const WaveState& state) {
    if (state.lattice != impl_->lattice)
        throw std::invalid_argument("SpectralStepper::step: state lattice differs");

    impl_->last_edge_occupation = tail_mass(state, impl_->edge_margin);
    if (impl_->last_edge_occupation > kEdgeWarnThreshold) ++impl_->warning_count;

    const int n = state.lattice.size();
    WaveState out;
    out.lattice = state.lattice;
    out.amplitudes.resize(static_cast<size_t>(n));

    if (impl_->params.kappa == 0.0) {
        // Kick phase is identically 1; skip the transforms.
        for (int i = 0; i < n; ++i)
            out.amplitudes[static_cast<size_t>(i)] =
                impl_->free_phase[static_cast<size_t>(i)] * state.amplitudes[static_cast<size_t>(i)];
        return out;
    }

    // The site-index phase e^{-i theta_k l_min} that maps array index to
    // angular momentum cancels between the two transforms, and the kick
    // multiplication commutes with it, so plain DFTs suffice.
    auto* buf = reinterpret_cast<cplx*>(impl_->buf);
    for (int i = 0; i < n; ++i)
        buf[i] = impl_->free_phase[static_cast<size_t>(i)] * state.amplitudes[static_cast<size_t>(i)];
    fftw_execute(impl_->fwd);
    for (int k = 0; k < n; ++k) buf[k] *= impl_->kick_phase[static_cast<size_t>(k)];
    fftw_execute(impl_->bwd);

    const double scale = 1.0 / n;
    for (int i = 0; i < n; ++i) out.amplitudes[static_cast<size_t>(i)] = buf[i] * scale;
    return out;
}

double SpectralStepper::last_edge_occupation() const { return impl_->last_edge_occupation; }
int SpectralStepper::warning_count() const { return impl_->warning_count; }

WaveState spectral_step(const WaveState& state, const ResonanceParams& params) {
    SpectralStepper stepper(state.lattice, params);
    return stepper.step(state);
}

} // namespace qkr
