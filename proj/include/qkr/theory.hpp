#pragma once

#include "qkr/core.hpp"

// Analytic predictions for the primary resonance (p/q = 1): the dispersion
// relation of the map, plane-wave group velocity, exact moment evolution from
// arbitrary initial amplitudes, and Gaussian closed forms.
//
// The exact-sum predictors are identities of the map and serve as the ground
// truth everywhere. The Gaussian closed forms exist in two conventions that
// differ in whether the damping exponents use sigma0 or sigma0^2; they agree
// at sigma0 = 1 and only the squared convention tracks the exact sums as
// sigma0 grows, so that is the default.

namespace qkr {

// Damping-exponent convention for the Gaussian closed forms:
//   linear_sigma : exponents 1/(8*sigma0),   1/(2*sigma0),   1/(4*sigma0)
//   squared_sigma: exponents 1/(8*sigma0^2), 1/(2*sigma0^2), 1/(4*sigma0^2)
enum class ExponentMode {
    linear_sigma,
    squared_sigma,
};

struct GaussianMomentPrediction {
    double m1 = 0.0;
    double m2 = 0.0;
    double variance = 0.0; // m2 - m1^2 by construction
    double vg = 0.0;
    ExponentMode mode = ExponentMode::squared_sigma;
};

// omega(theta) = kappa * cos(theta)
double dispersion(double theta, double kappa);

// v_g = d omega / d theta = -kappa * sin(theta)
double group_velocity_plane(double theta, double kappa);

// Exact first moment after n kicks at the primary resonance:
//   M1(n) = -kappa*n * sum_j Im[a_j(0) a*_{j-1}(0)] + M1(0)
double predict_m1(const WaveState& init, double kappa, int n);

// Exact second moment after n kicks at the primary resonance:
//   M2(n) = (kappa*n)^2/2 * (1 - sum_j Re[a_j(0) a*_{j+2}(0)])
//         + kappa*n * sum_j (2j+1) Im[a_j(0) a*_{j+1}(0)] + M2(0)
double predict_m2(const WaveState& init, double kappa, int n);

// Closed-form Gaussian moments; M2(0) is taken from the discrete initial
// weights, not the continuum sigma0^2, so the prediction stays consistent
// with the simulator at small sigma0.
GaussianMomentPrediction gaussian_moments(const GaussianSpec& spec, double kappa, int n,
                                          ExponentMode mode = ExponentMode::squared_sigma);

// The bracket 2*(variance(n) - variance(0)) / (kappa*n)^2 of the Gaussian
// closed form; independent of kappa and n:
//   1 - cos(2*theta0)*e^{-1/(2s)} - 2*sin^2(theta0)*e^{-1/(4s)}
double variance_growth_coefficient(double theta0, double sigma0,
                                   ExponentMode mode = ExponentMode::squared_sigma);

// Second moment of the discrete renormalized Gaussian weights about the
// center (initial variance of the wavepacket), by direct summation.
double discrete_gaussian_m2(double sigma0);

} // namespace qkr
