#include "qkr/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace qkr {

namespace {

constexpr double kUnderflowFlush = 1e-300;
// Rescale threshold for the backward recurrence. Kept low enough that the
// running sum of squares cannot overflow before a rescale triggers.
constexpr double kRescaleAt = 1e150;
constexpr double kRescaleBy = 1e-150;

} // namespace

int bessel_start_order(double x, int n_max) {
    int base = std::max(n_max, static_cast<int>(std::ceil(x)));
    return base + 40 + static_cast<int>(std::ceil(10.0 * std::cbrt(x)));
}

BesselRow bessel_row(double x, int n_max) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("bessel_row: argument must be finite and nonnegative");
    if (n_max < 0)
        throw std::invalid_argument("bessel_row: n_max must be nonnegative");

    BesselRow row;
    row.x = x;
    row.values.assign(static_cast<size_t>(n_max) + 1, 0.0);

    if (x == 0.0) {
        row.values[0] = 1.0; // J_0(0) = 1, J_n(0) = 0
        return row;
    }

    // Miller backward recurrence: seed two orders above the start index,
    // recur down with J_{n-1} = (2n/x) J_n - J_{n+1}, and normalize with the
    // Neumann sum rule. The seed's arbitrary scale cancels in the
    // normalization; its sign is positive because J_n(x) > 0 above the
    // turning point n > x.
    const int n_start = bessel_start_order(x, n_max);
    double fnp1 = 0.0;
    double fn = 1e-30;
    double sum_sq = 0.0; // accumulates f_0^2 + 2*sum_{n>=1} f_n^2

    for (int n = n_start; n >= 0; --n) {
        if (n <= n_max) row.values[static_cast<size_t>(n)] = fn;
        sum_sq += (n == 0 ? 1.0 : 2.0) * fn * fn;
        if (n > 0) {
            double fnm1 = (2.0 * n / x) * fn - fnp1;
            fnp1 = fn;
            fn = fnm1;
            if (std::abs(fn) > kRescaleAt) {
                fn *= kRescaleBy;
                fnp1 *= kRescaleBy;
                sum_sq *= kRescaleBy * kRescaleBy;
                for (double& v : row.values) v *= kRescaleBy;
            }
        }
    }

    const double scale = 1.0 / std::sqrt(sum_sq);
    for (double& v : row.values) {
        v *= scale;
        if (std::abs(v) < kUnderflowFlush) v = 0.0;
    }
    return row;
}

double bessel_j(int n, double x) {
    const int an = std::abs(n);
    const double jn = bessel_row(x, an).values[static_cast<size_t>(an)];
    return (n < 0 && (an & 1)) ? -jn : jn;
}

} // namespace qkr
