#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qkr/core.hpp"
#include "qkr/observables.hpp"
#include "qkr/theory.hpp"

// The numerical studies: moment series, least-squares group-velocity fits,
// and the theta0 / kappa sweeps for the secondary resonances. Sweeps run
// grid points concurrently; every record carries full provenance so any
// point can be regenerated from its own fields.

namespace qkr {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    int n_min = 0;
    int n_max = 0;
    double residual_rms = 0.0;
};

struct SweepRecord {
    std::string variable;   // "theta0" or "kappa"
    double value = 0.0;     // the swept value
    LinearFit fit;          // fitted group velocity = fit.slope
    // run parameters, sufficient to regenerate the record
    int p = 1;
    int q = 1;
    double kappa = 0.0;
    double sigma0 = 1.0;
    double theta0 = 0.0;
    int l_center = 0;
    int half_width = 0;
    int n_steps = 0;
    int record_every = 1;
};

struct RunOptions {
    int record_every = 1;
    // Lattice half-width about l_center; auto-sized when absent:
    // ceil(n_steps*kappa) + ceil(6*sigma0) + 50.
    std::optional<int> half_width;
    // Resource guard: reject lattices larger than this.
    std::int64_t max_lattice_size = 8'000'000;
};

int auto_half_width(const GaussianSpec& spec, const ResonanceParams& params, int n_steps);

// Ordinary least squares of m1 against n over the window, which is clamped
// to the recorded range. Requires >= 10 points after clamping.
LinearFit fit_group_velocity(const MomentSeries& series, int n_min, int n_max);

// Evolves a Gaussian initial state and records (n, M1, M2, variance, norm,
// tail mass) every record_every steps. Tail mass probes the 20 outermost
// sites at each edge; a nonzero value flags a lattice close to saturation.
MomentSeries run_moment_series(const GaussianSpec& spec, const ResonanceParams& params,
                               int n_steps, const RunOptions& opts = {});

// One fitted group velocity per theta0, in grid order.
std::vector<SweepRecord> sweep_theta(const ResonanceParams& params, double sigma0,
                                     const std::vector<double>& theta_grid, int n_steps,
                                     int fit_min, int fit_max, const RunOptions& opts = {});

// One fitted group velocity per kappa, in grid order.
std::vector<SweepRecord> sweep_kappa(int p, int q, double sigma0, double theta0,
                                     const std::vector<double>& kappa_grid, int n_steps,
                                     int fit_min, int fit_max, const RunOptions& opts = {});

struct VarianceCoefficientPoint {
    double sigma0 = 0.0;
    double theta0 = 0.0;
    double coefficient = 0.0;
};

// Analytic variance-growth coefficient on a (sigma0, theta0) grid.
std::vector<VarianceCoefficientPoint> figure1_data(const std::vector<double>& sigma0_list,
                                                   const std::vector<double>& theta_grid,
                                                   ExponentMode mode);

struct SnapshotPoint {
    int t = 0;
    int l = 0;
    double p = 0.0;
};

// Probability distributions at the requested times (must be sorted,
// nonnegative, unique), from a single evolution pass.
std::vector<SnapshotPoint> snapshot_distributions(const GaussianSpec& spec,
                                                  const ResonanceParams& params,
                                                  const std::vector<int>& times,
                                                  const RunOptions& opts = {});

} // namespace qkr
