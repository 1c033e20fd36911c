#pragma once

#include <vector>

#include "qkr/core.hpp"

// Read-only diagnostics on a WaveState. All reductions use compensated
// summation in a fixed order (low index to high), so results are exactly
// reproducible run to run.

namespace qkr {

// P_l = |a_l|^2, indexed like the lattice.
std::vector<double> probability(const WaveState& state);

// M1 = sum_l l * |a_l|^2
double moment1(const WaveState& state);

// M2 = sum_l l^2 * |a_l|^2
double moment2(const WaveState& state);

// M2 - M1^2
double variance(const WaveState& state);

// L = hbar_scale * M1 (dimensionless with the default scale).
double angular_momentum(const WaveState& state, double hbar_scale = 1.0);

// E = epsilon_scale * M2.
double energy(const WaveState& state, double epsilon_scale = 1.0);

// Probability mass on the `margin` outermost sites at each lattice edge.
// Requires 0 <= margin < lattice.size()/2.
double tail_mass(const WaveState& state, int margin);

struct MomentEntry {
    int n = 0;
    double m1 = 0.0;
    double m2 = 0.0;
    double variance = 0.0;
    double norm = 0.0;
    double tail_mass = 0.0;
};

// Time-indexed record of the moments; n strictly increasing.
struct MomentSeries {
    std::vector<MomentEntry> entries;
};

} // namespace qkr
