#include "qkr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

#include "qkr/evolve.hpp"
#include "summation.hpp"

namespace qkr {

namespace {

MomentEntry make_entry(int n, const WaveState& state, int tail_margin) {
    MomentEntry e;
    e.n = n;
    e.m1 = moment1(state);
    e.m2 = moment2(state);
    e.variance = e.m2 - e.m1 * e.m1;
    e.norm = norm(state);
    e.tail_mass = tail_mass(state, tail_margin);
    return e;
}

// Runs f(i) for every grid index, concurrently; the first exception wins and
// is rethrown on the calling thread.
template <typename F>
void parallel_grid(int count, F&& f) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        try {
            f(i);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

} // namespace

int auto_half_width(const GaussianSpec& spec, const ResonanceParams& params, int n_steps) {
    return static_cast<int>(std::ceil(n_steps * params.kappa)) +
           static_cast<int>(std::ceil(6.0 * spec.sigma0)) + 50;
}

LinearFit fit_group_velocity(const MomentSeries& series, int n_min, int n_max) {
    if (series.entries.empty()) throw std::invalid_argument("fit_group_velocity: empty series");
    // Never extrapolate: clamp the window inside the recorded range.
    n_min = std::max(n_min, series.entries.front().n);
    n_max = std::min(n_max, series.entries.back().n);
    if (n_min >= n_max)
        throw std::invalid_argument("fit_group_velocity: window lies outside the recorded series");

    std::vector<double> x, y;
    for (const auto& e : series.entries) {
        if (e.n >= n_min && e.n <= n_max) {
            x.push_back(e.n);
            y.push_back(e.m1);
        }
    }
    const size_t m = x.size();
    if (m < 10) throw std::invalid_argument("fit_group_velocity: need at least 10 points in window");

    detail::KahanSum sx, sy;
    for (size_t i = 0; i < m; ++i) {
        sx.add(x[i]);
        sy.add(y[i]);
    }
    const double xbar = sx.value() / static_cast<double>(m);
    const double ybar = sy.value() / static_cast<double>(m);
    detail::KahanSum sxx, sxy;
    for (size_t i = 0; i < m; ++i) {
        sxx.add((x[i] - xbar) * (x[i] - xbar));
        sxy.add((x[i] - xbar) * (y[i] - ybar));
    }
    if (sxx.value() == 0.0)
        throw std::invalid_argument("fit_group_velocity: degenerate window (constant n)");

    LinearFit fit;
    fit.n_min = n_min;
    fit.n_max = n_max;
    fit.slope = sxy.value() / sxx.value();
    fit.intercept = ybar - fit.slope * xbar;
    detail::KahanSum ssr;
    for (size_t i = 0; i < m; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ssr.add(r * r);
    }
    fit.residual_rms = std::sqrt(ssr.value() / static_cast<double>(m));
    fit.stderr_slope =
        m > 2 ? std::sqrt(ssr.value() / static_cast<double>(m - 2) / sxx.value()) : 0.0;
    return fit;
}

MomentSeries run_moment_series(const GaussianSpec& spec, const ResonanceParams& params,
                               int n_steps, const RunOptions& opts) {
    if (n_steps < 0) throw std::invalid_argument("run_moment_series: n_steps must be nonnegative");
    if (opts.record_every < 1)
        throw std::invalid_argument("run_moment_series: record_every must be positive");

    const int hw = opts.half_width.value_or(auto_half_width(spec, params, n_steps));
    const std::int64_t size = 2 * static_cast<std::int64_t>(hw) + 1;
    if (size > opts.max_lattice_size)
        throw std::runtime_error("run_moment_series: lattice of " + std::to_string(size) +
                                 " sites exceeds the configured cap of " +
                                 std::to_string(opts.max_lattice_size));

    const Lattice lattice = make_lattice(spec.l_center - hw, spec.l_center + hw);
    const WaveState init = gaussian_state(lattice, spec);
    const StepOperator op = build_step_operator(lattice, params);
    const int tail_margin = std::min(20, (lattice.size() - 1) / 2);

    MomentSeries series;
    series.entries.push_back(make_entry(0, init, tail_margin));
    WaveState state = init;
    for (int n = 1; n <= n_steps; ++n) {
        state = step(state, op);
        if (n % opts.record_every == 0 || n == n_steps)
            series.entries.push_back(make_entry(n, state, tail_margin));
    }
    return series;
}

std::vector<SweepRecord> sweep_theta(const ResonanceParams& params, double sigma0,
                                     const std::vector<double>& theta_grid, int n_steps,
                                     int fit_min, int fit_max, const RunOptions& opts) {
    if (theta_grid.empty()) throw std::invalid_argument("sweep_theta: empty grid");
    std::vector<SweepRecord> records(theta_grid.size());
    parallel_grid(static_cast<int>(theta_grid.size()), [&](int i) {
        const GaussianSpec spec{sigma0, theta_grid[static_cast<size_t>(i)], 0};
        RunOptions run_opts = opts;
        run_opts.half_width = opts.half_width.value_or(auto_half_width(spec, params, n_steps));
        const MomentSeries series = run_moment_series(spec, params, n_steps, run_opts);

        SweepRecord& rec = records[static_cast<size_t>(i)];
        rec.variable = "theta0";
        rec.value = spec.theta0;
        rec.fit = fit_group_velocity(series, fit_min, fit_max);
        rec.p = params.p;
        rec.q = params.q;
        rec.kappa = params.kappa;
        rec.sigma0 = sigma0;
        rec.theta0 = spec.theta0;
        rec.l_center = spec.l_center;
        rec.half_width = *run_opts.half_width;
        rec.n_steps = n_steps;
        rec.record_every = opts.record_every;
    });
    return records;
}

std::vector<SweepRecord> sweep_kappa(int p, int q, double sigma0, double theta0,
                                     const std::vector<double>& kappa_grid, int n_steps,
                                     int fit_min, int fit_max, const RunOptions& opts) {
    if (kappa_grid.empty()) throw std::invalid_argument("sweep_kappa: empty grid");
    std::vector<SweepRecord> records(kappa_grid.size());
    parallel_grid(static_cast<int>(kappa_grid.size()), [&](int i) {
        const ResonanceParams params = make_resonance(p, q, kappa_grid[static_cast<size_t>(i)]);
        const GaussianSpec spec{sigma0, theta0, 0};
        RunOptions run_opts = opts;
        run_opts.half_width = opts.half_width.value_or(auto_half_width(spec, params, n_steps));
        const MomentSeries series = run_moment_series(spec, params, n_steps, run_opts);

        SweepRecord& rec = records[static_cast<size_t>(i)];
        rec.variable = "kappa";
        rec.value = params.kappa;
        rec.fit = fit_group_velocity(series, fit_min, fit_max);
        rec.p = p;
        rec.q = q;
        rec.kappa = params.kappa;
        rec.sigma0 = sigma0;
        rec.theta0 = theta0;
        rec.l_center = spec.l_center;
        rec.half_width = *run_opts.half_width;
        rec.n_steps = n_steps;
        rec.record_every = opts.record_every;
    });
    return records;
}

std::vector<VarianceCoefficientPoint> figure1_data(const std::vector<double>& sigma0_list,
                                                   const std::vector<double>& theta_grid,
                                                   ExponentMode mode) {
    std::vector<VarianceCoefficientPoint> points;
    points.reserve(sigma0_list.size() * theta_grid.size());
    for (double sigma0 : sigma0_list)
        for (double theta0 : theta_grid)
            points.push_back({sigma0, theta0, variance_growth_coefficient(theta0, sigma0, mode)});
    return points;
}

std::vector<SnapshotPoint> snapshot_distributions(const GaussianSpec& spec,
                                                  const ResonanceParams& params,
                                                  const std::vector<int>& times,
                                                  const RunOptions& opts) {
    if (times.empty()) throw std::invalid_argument("snapshot_distributions: no times requested");
    for (size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0)
            throw std::invalid_argument("snapshot_distributions: times must be nonnegative");
        if (i > 0 && times[i] <= times[i - 1])
            throw std::invalid_argument("snapshot_distributions: times must be strictly increasing");
    }

    const int n_steps = times.back();
    const int hw = opts.half_width.value_or(auto_half_width(spec, params, n_steps));
    const Lattice lattice = make_lattice(spec.l_center - hw, spec.l_center + hw);
    const WaveState init = gaussian_state(lattice, spec);

    std::vector<SnapshotPoint> points;
    auto emit = [&](int t, const WaveState& state) {
        const auto p = probability(state);
        for (size_t i = 0; i < p.size(); ++i)
            points.push_back({t, lattice.l_of(static_cast<int>(i)), p[i]});
    };

    size_t next = 0;
    if (times[0] == 0) {
        emit(0, init);
        next = 1;
    }
    if (n_steps > 0) {
        evolve(init, params, n_steps, [&](int n, const WaveState& state) {
            if (next < times.size() && times[next] == n) {
                emit(n, state);
                ++next;
            }
        });
    }
    return points;
}

} // namespace qkr
