#include "qkr/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "summation.hpp"

namespace qkr {

std::vector<double> probability(const WaveState& state) {
    std::vector<double> p(state.amplitudes.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state.amplitudes[i]);
    return p;
}

double moment1(const WaveState& state) {
    detail::KahanSum sum;
    for (size_t i = 0; i < state.amplitudes.size(); ++i) {
        const double l = state.lattice.l_of(static_cast<int>(i));
        sum.add(l * std::norm(state.amplitudes[i]));
    }
    return sum.value();
}

double moment2(const WaveState& state) {
    detail::KahanSum sum;
    for (size_t i = 0; i < state.amplitudes.size(); ++i) {
        const double l = state.lattice.l_of(static_cast<int>(i));
        sum.add(l * l * std::norm(state.amplitudes[i]));
    }
    return sum.value();
}

double variance(const WaveState& state) {
    const double m1 = moment1(state);
    return moment2(state) - m1 * m1;
}

double angular_momentum(const WaveState& state, double hbar_scale) {
    return hbar_scale * moment1(state);
}

double energy(const WaveState& state, double epsilon_scale) {
    return epsilon_scale * moment2(state);
}

double tail_mass(const WaveState& state, int margin) {
    const int n = static_cast<int>(state.amplitudes.size());
    if (margin < 0 || 2 * margin >= n)
        throw std::invalid_argument("tail_mass: margin must satisfy 0 <= margin < size/2");
    detail::KahanSum sum;
    for (int i = 0; i < margin; ++i) sum.add(std::norm(state.amplitudes[static_cast<size_t>(i)]));
    for (int i = n - margin; i < n; ++i)
        sum.add(std::norm(state.amplitudes[static_cast<size_t>(i)]));
    return sum.value();
}

} // namespace qkr
