#include "tfpe/mc_verification.hpp"

#include <cmath>
#include <vector>

#include "tfpe/errors.hpp"
#include "tfpe/parallel.hpp"

namespace tfpe {

IncrementSampler::IncrementSampler(const TemperedStableParams& params, double dt,
                                   double eps)
    : alpha_(params.alpha), lambda_(params.lambda), eps_(eps), dt_(dt) {
    validate_params(params);
    if (!(dt > 0.0)) throw ConfigError("IncrementSampler: dt must be > 0");
    if (!(eps > 0.0 && eps < 1.0)) {
        throw ConfigError("IncrementSampler: epsilon must lie in (0, 1)");
    }
    rate_ = tail_mass(params, eps);
    sigma2_ = params.c_alpha == 0.0 ? 0.0 : truncated_second_moment(params, eps);
    gauss_scale_ = std::sqrt(dt * sigma2_);
}

double IncrementSampler::sample(Xoshiro256pp& rng, long* jump_count) const {
    double dl = gauss_scale_ == 0.0 ? 0.0 : gauss_scale_ * rng.normal();
    const long n = rng.poisson(rate_ * dt_);
    if (jump_count != nullptr) *jump_count += n;
    for (long i = 0; i < n; ++i) {
        // Pareto tail proposal |y| = eps u^{-1/alpha}, tempering acceptance
        // e^{-lambda (|y| - eps)}, symmetric sign.
        double y = 0.0;
        for (;;) {
            y = eps_ * std::pow(rng.uniform(), -1.0 / alpha_);
            if (rng.uniform() <= std::exp(-lambda_ * (y - eps_))) break;
        }
        dl += rng.uniform() <= 0.5 ? y : -y;
    }
    return dl;
}

double sample_increment(const TemperedStableParams& params, double dt, double eps,
                        Xoshiro256pp& rng) {
    return IncrementSampler(params, dt, eps).sample(rng);
}

PathEnsemble simulate_paths(const McConfig& cfg) {
    validate_params(cfg.params);
    if (cfg.n_paths < 1) throw ConfigError("simulate_paths: n_paths must be >= 1");
    if (!(cfg.dt > 0.0)) throw ConfigError("simulate_paths: dt must be > 0");
    if (!(cfg.t_final >= 0.0)) throw ConfigError("simulate_paths: t_final must be >= 0");

    const IncrementSampler sampler(cfg.params, cfg.dt, cfg.jump_cutoff);
    long n_steps = static_cast<long>(std::floor(cfg.t_final / cfg.dt + 1e-9));
    double remainder = cfg.t_final - n_steps * cfg.dt;
    if (remainder < 1e-12 * cfg.dt) remainder = 0.0;
    // A shortened sampler covers the fractional last step, if any.
    const IncrementSampler* tail_sampler = nullptr;
    IncrementSampler tail_storage = sampler;
    if (remainder > 0.0) {
        tail_storage = IncrementSampler(cfg.params, remainder, cfg.jump_cutoff);
        tail_sampler = &tail_storage;
    }

    Eigen::ArrayXd terminal(cfg.n_paths);
    parallel_for(cfg.n_paths, [&](long p) {
        Xoshiro256pp rng = Xoshiro256pp::for_stream(cfg.seed, static_cast<std::uint64_t>(p));
        double x = cfg.initial.sample(rng);
        for (long s = 0; s < n_steps; ++s) {
            x += cfg.drift(x) * cfg.dt + sampler.sample(rng);
        }
        if (tail_sampler != nullptr) {
            x += cfg.drift(x) * remainder + tail_sampler->sample(rng);
        }
        terminal[p] = x;
    });

    PathEnsemble out;
    out.terminal.resize(cfg.n_paths);
    long kept = 0;
    for (long p = 0; p < cfg.n_paths; ++p) {
        if (std::isfinite(terminal[p])) {
            out.terminal[kept++] = terminal[p];
        } else {
            ++out.dropped;
        }
    }
    out.terminal.conservativeResize(kept);
    return out;
}

EmpiricalDensity empirical_density(const Eigen::ArrayXd& samples, const Grid1D& grid) {
    if (samples.size() == 0) {
        throw ConfigError("empirical_density: no samples");
    }
    const int n = grid.node_count();
    const double h = grid.spacing();
    const double x_min = grid.x(grid.min_index());
    const double x_max = grid.x(grid.max_index());

    std::vector<long> counts(static_cast<std::size_t>(n), 0);
    long retained = 0;
    for (Eigen::Index i = 0; i < samples.size(); ++i) {
        const double s = samples[i];
        if (s < x_min || s > x_max) continue;
        int idx = static_cast<int>(std::floor((s - x_min) / h + 0.5));
        if (idx < 0) idx = 0;
        if (idx >= n) idx = n - 1;
        ++counts[static_cast<std::size_t>(idx)];
        ++retained;
    }

    EmpiricalDensity out;
    out.retained = retained;
    out.escaped_fraction =
        static_cast<double>(samples.size() - retained) / static_cast<double>(samples.size());
    out.field = zero_field(grid);
    const double norm = static_cast<double>(samples.size()) * h;
    for (int i = 0; i < n; ++i) {
        double v = static_cast<double>(counts[static_cast<std::size_t>(i)]) / norm;
        // End cells are half width; doubling keeps the trapezoidal mass exact.
        if (i == 0 || i == n - 1) v *= 2.0;
        out.field.values[i] = v;
    }
    return out;
}

double l1_distance(const Grid1D& grid, const DensityField& p, const DensityField& q) {
    if (p.values.size() != grid.node_count() || q.values.size() != grid.node_count()) {
        throw ConfigError("l1_distance: fields not aligned to grid");
    }
    return grid.spacing() * (p.values - q.values).abs().sum();
}

}  // namespace tfpe
