#include "qkr/theory.hpp"

#include <cmath>
#include <stdexcept>

#include "qkr/observables.hpp"
#include "summation.hpp"

namespace qkr {

namespace {

double exponent_scale(double sigma0, ExponentMode mode) {
    return mode == ExponentMode::linear_sigma ? sigma0 : sigma0 * sigma0;
}

} // namespace

double dispersion(double theta, double kappa) { return kappa * std::cos(theta); }

double group_velocity_plane(double theta, double kappa) { return -kappa * std::sin(theta); }

double predict_m1(const WaveState& init, double kappa, int n) {
    // M1(n) = -kappa*n * sum_j Im[a_j a*_{j-1}] + M1(0); exact at p/q = 1.
    detail::KahanSum overlap;
    for (size_t i = 1; i < init.amplitudes.size(); ++i)
        overlap.add(std::imag(init.amplitudes[i] * std::conj(init.amplitudes[i - 1])));
    return -kappa * n * overlap.value() + moment1(init);
}

double predict_m2(const WaveState& init, double kappa, int n) {
    // M2(n) = (kappa*n)^2/2 * (1 - sum_j Re[a_j a*_{j+2}])
    //       + kappa*n * sum_j (2j+1) Im[a_j a*_{j+1}] + M2(0); exact at p/q = 1.
    detail::KahanSum re2;
    for (size_t i = 0; i + 2 < init.amplitudes.size(); ++i)
        re2.add(std::real(init.amplitudes[i] * std::conj(init.amplitudes[i + 2])));
    detail::KahanSum im1;
    for (size_t i = 0; i + 1 < init.amplitudes.size(); ++i) {
        const double j = init.lattice.l_of(static_cast<int>(i));
        im1.add((2.0 * j + 1.0) *
                std::imag(init.amplitudes[i] * std::conj(init.amplitudes[i + 1])));
    }
    const double kn = kappa * n;
    return 0.5 * kn * kn * (1.0 - re2.value()) + kn * im1.value() + moment2(init);
}

double discrete_gaussian_m2(double sigma0) {
    if (!(sigma0 > 0.0) || !std::isfinite(sigma0))
        throw std::invalid_argument("discrete_gaussian_m2: sigma0 must be positive");
    // Direct summation of the renormalized weights; the range covers every
    // term above double underflow.
    const int j_max = static_cast<int>(std::ceil(40.0 * sigma0)) + 10;
    const double inv2s2 = 1.0 / (2.0 * sigma0 * sigma0);
    detail::KahanSum weight;
    detail::KahanSum weighted;
    weight.add(1.0);
    for (int j = 1; j <= j_max; ++j) {
        const double w = std::exp(-j * j * inv2s2);
        weight.add(2.0 * w);
        weighted.add(2.0 * w * static_cast<double>(j) * static_cast<double>(j));
    }
    return weighted.value() / weight.value();
}

GaussianMomentPrediction gaussian_moments(const GaussianSpec& spec, double kappa, int n,
                                          ExponentMode mode) {
    if (!(spec.sigma0 > 0.0))
        throw std::invalid_argument("gaussian_moments: sigma0 must be positive");
    const double s = exponent_scale(spec.sigma0, mode);
    const double e8 = std::exp(-1.0 / (8.0 * s));
    const double e2 = std::exp(-1.0 / (2.0 * s));
    const double kn = kappa * n;
    const double sin_t = std::sin(spec.theta0);
    const double cos_2t = std::cos(2.0 * spec.theta0);
    const double c = spec.l_center;
    const double var0 = discrete_gaussian_m2(spec.sigma0);

    GaussianMomentPrediction pred;
    pred.mode = mode;
    pred.vg = -kappa * sin_t * e8;
    pred.m1 = c - kn * sin_t * e8;
    // The center couples to the drift through the (2j+1) cross term.
    pred.m2 = 0.5 * kn * kn * (1.0 - cos_2t * e2) - 2.0 * c * kn * sin_t * e8 + var0 + c * c;
    pred.variance = pred.m2 - pred.m1 * pred.m1;
    return pred;
}

double variance_growth_coefficient(double theta0, double sigma0, ExponentMode mode) {
    const double s = exponent_scale(sigma0, mode);
    const double e2 = std::exp(-1.0 / (2.0 * s));
    const double e4 = std::exp(-1.0 / (4.0 * s));
    const double sin_t = std::sin(theta0);
    return 1.0 - std::cos(2.0 * theta0) * e2 - 2.0 * sin_t * sin_t * e4;
}

} // namespace qkr
