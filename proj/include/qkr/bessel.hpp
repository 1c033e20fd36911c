#pragma once

#include <vector>

// Integer-order cylindrical Bessel functions J_n(x) for x >= 0, computed by
// Miller's backward recurrence and normalized with the Neumann sum rule
// J_0^2 + 2*sum_{n>=1} J_n^2 = 1. Forward recurrence is unstable for n > x
// and is never used.

namespace qkr {

struct BesselRow {
    double x = 0.0;
    std::vector<double> values; // values[n] = J_n(x), n = 0..n_max
};

// J_0(x) .. J_{n_max}(x) in one backward pass. Absolute accuracy is near
// machine precision over the argument range this project uses (x up to ~1e3).
// Values whose magnitude falls below 1e-300 are flushed to exact zero.
BesselRow bessel_row(double x, int n_max);

// J_n(x) for any integer sign of n, via J_{-n}(x) = (-1)^n J_n(x).
double bessel_j(int n, double x);

// Start order for the backward recurrence; also the band half-width beyond
// which |J_n(x)| has decayed past 1e-16 with a wide safety margin.
int bessel_start_order(double x, int n_max);

} // namespace qkr
