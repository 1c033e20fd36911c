#include "qkr/core.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "summation.hpp"

namespace qkr {

Lattice make_lattice(int l_min, int l_max) {
    if (l_min >= l_max)
        throw std::invalid_argument("make_lattice: l_min must be less than l_max");
    if (l_max - l_min + 1 < 3)
        throw std::invalid_argument("make_lattice: lattice needs at least 3 sites");
    return Lattice{l_min, l_max};
}

ResonanceParams make_resonance(int p, int q, double kappa) {
    if (p <= 0 || q <= 0)
        throw std::invalid_argument("make_resonance: p and q must be positive");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("make_resonance: p/q must be in lowest terms");
    if (!std::isfinite(kappa) || kappa < 0.0)
        throw std::invalid_argument("make_resonance: kappa must be finite and nonnegative");
    return ResonanceParams{p, q, kappa};
}

WaveState gaussian_state(const Lattice& lattice, const GaussianSpec& spec) {
    if (!(spec.sigma0 > 0.0) || !std::isfinite(spec.sigma0))
        throw std::invalid_argument("gaussian_state: sigma0 must be positive");
    if (!std::isfinite(spec.theta0))
        throw std::invalid_argument("gaussian_state: theta0 must be finite");
    const double margin_lo = spec.l_center - lattice.l_min;
    const double margin_hi = lattice.l_max - spec.l_center;
    if (margin_lo < 6.0 * spec.sigma0 || margin_hi < 6.0 * spec.sigma0)
        throw std::invalid_argument(
            "gaussian_state: lattice leaves less than a 6*sigma0 margin around l_center; "
            "the truncated tail would not be negligible");

    const double inv4s2 = 1.0 / (4.0 * spec.sigma0 * spec.sigma0);
    return modulated_state(
        lattice,
        [&](int l) {
            const double d = static_cast<double>(l) - spec.l_center;
            return std::exp(-d * d * inv4s2);
        },
        spec.theta0);
}

WaveState modulated_state(const Lattice& lattice, const std::function<double(int)>& envelope,
                          double theta0) {
    WaveState state;
    state.lattice = lattice;
    state.amplitudes.resize(static_cast<size_t>(lattice.size()));
    detail::KahanSum nrm;
    for (int i = 0; i < lattice.size(); ++i) {
        const int l = lattice.l_of(i);
        const double f = envelope(l);
        if (!std::isfinite(f) || f < 0.0)
            throw std::invalid_argument("modulated_state: envelope must be finite and nonnegative");
        state.amplitudes[static_cast<size_t>(i)] =
            f * cplx{std::cos(theta0 * l), std::sin(theta0 * l)};
        nrm.add(f * f);
    }
    const double total = nrm.value();
    if (total <= 0.0)
        throw std::invalid_argument("modulated_state: envelope is identically zero on the lattice");
    const double scale = 1.0 / std::sqrt(total);
    for (auto& a : state.amplitudes) a *= scale;
    return state;
}

WaveState delta_state(const Lattice& lattice, int l0) {
    if (!lattice.contains(l0))
        throw std::invalid_argument("delta_state: site outside lattice");
    WaveState state;
    state.lattice = lattice;
    state.amplitudes.assign(static_cast<size_t>(lattice.size()), cplx{0.0, 0.0});
    state.amplitudes[static_cast<size_t>(lattice.index_of(l0))] = cplx{1.0, 0.0};
    return state;
}

double norm(const WaveState& state) {
    detail::KahanSum sum;
    for (const auto& a : state.amplitudes) sum.add(std::norm(a));
    return sum.value();
}

WaveState normalized(WaveState state) {
    const double n = norm(state);
    if (n <= 0.0) throw std::invalid_argument("normalized: zero state");
    const double scale = 1.0 / std::sqrt(n);
    for (auto& a : state.amplitudes) a *= scale;
    return state;
}

} // namespace qkr
