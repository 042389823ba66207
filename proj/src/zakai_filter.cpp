#include "tfpe/zakai_filter.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tfpe/errors.hpp"
#include "tfpe/mc_verification.hpp"
#include "tfpe/rng.hpp"

namespace tfpe {

ObservationPath simulate_signal_observation(const DriftSpec& drift,
                                            const TemperedStableParams& params,
                                            const ObservationModel& obs, double x0,
                                            double y0, double dt, double t_final,
                                            std::uint64_t seed, double epsilon) {
    if (!(dt > 0.0)) throw ConfigError("simulate_signal_observation: dt must be > 0");
    if (!(t_final >= 0.0)) {
        throw ConfigError("simulate_signal_observation: t_final must be >= 0");
    }
    const long n = static_cast<long>(std::llround(t_final / dt));
    const IncrementSampler sampler(params, dt, epsilon);
    Xoshiro256pp signal_rng = Xoshiro256pp::for_stream(seed, 0);
    Xoshiro256pp obs_rng = Xoshiro256pp::for_stream(seed, 1);

    ObservationPath path;
    path.t0 = 0.0;
    path.dt = dt;
    path.y0 = y0;
    path.increments.reserve(static_cast<std::size_t>(n));
    path.truth.reserve(static_cast<std::size_t>(n) + 1);
    const double sdt = std::sqrt(dt);

    double x = x0;
    path.truth.push_back(x);
    for (long k = 0; k < n; ++k) {
        const double dy =
            obs(x) * dt + obs.noise_intensity * sdt * obs_rng.normal();
        path.increments.push_back(dy);
        x += drift(x) * dt + sampler.sample(signal_rng);
        path.truth.push_back(x);
    }
    return path;
}

namespace {

Eigen::ArrayXd observation_values(const ObservationModel& obs, const Grid1D& grid) {
    Eigen::ArrayXd hv(grid.node_count());
    for (int i = 0; i < grid.node_count(); ++i) {
        hv[i] = obs(grid.x(grid.min_index() + i));
    }
    return hv;
}

void apply_correction(DensityField& field, const Eigen::ArrayXd& hv, double d_y,
                      double dt) {
    field.values *= (hv * d_y - 0.5 * hv.square() * dt).exp();
}

}  // namespace

DensityField zakai_step(const SolverConfig& cfg, const ObservationModel& obs,
                        const DensityField& field, double d_y) {
    FpeStepper stepper(cfg);
    DensityField out = stepper.step(field, cfg.dt);
    apply_correction(out, observation_values(obs, cfg.grid), d_y, cfg.dt);
    if (!out.values.allFinite()) {
        throw InstabilityError("zakai_step: non-finite density", cfg.dt,
                               max_stable_dt(cfg.params, cfg.grid.spacing()));
    }
    return out;
}

FilterResult run_filter(const SolverConfig& cfg, const ObservationModel& obs,
                        const DensityField& p0, const ObservationPath& path,
                        const std::vector<double>& snapshot_times) {
    if (path.steps() > 0 &&
        std::fabs(path.dt - cfg.dt) > 1e-12 * std::max(1.0, cfg.dt)) {
        throw ConfigError("run_filter: observation step does not match solver dt");
    }
    FilterResult result;
    auto record = [&](const DensityField& f) {
        const double mass = total_mass(cfg.grid, f);
        if (!(mass > 1e-300)) {
            throw DegenerateMassError(
                "run_filter: unnormalized mass underflowed (normalize more "
                "frequently or shorten the horizon)");
        }
        result.unnormalized.push_back(f);
        DensityField post = f;
        post.values /= mass;
        result.posterior.push_back(std::move(post));
        result.normalizations.push_back(mass);
    };

    // Snapshot times must land on the observation grid.
    std::vector<std::size_t> snap_steps;
    for (double t : snapshot_times) {
        const double k_real = (t - path.t0) / (path.steps() > 0 ? path.dt : cfg.dt);
        const auto k = static_cast<long>(std::llround(k_real));
        if (k < 0 || static_cast<std::size_t>(k) > path.steps() ||
            std::fabs(k_real - static_cast<double>(k)) > 1e-6) {
            throw ConfigError("run_filter: snapshot time " + std::to_string(t) +
                              " is not an observation time");
        }
        snap_steps.push_back(static_cast<std::size_t>(k));
        if (!snap_steps.empty() && snap_steps.size() >= 2 &&
            snap_steps[snap_steps.size() - 2] > snap_steps.back()) {
            throw ConfigError("run_filter: snapshot times must be sorted");
        }
    }

    FpeStepper stepper(cfg);
    const Eigen::ArrayXd hv = observation_values(obs, cfg.grid);

    DensityField cur = p0;
    std::size_t step = 0;
    for (std::size_t target : snap_steps) {
        while (step < target) {
            cur = stepper.step(cur, cfg.dt);
            apply_correction(cur, hv, path.increments[step], cfg.dt);
            if (!cur.values.allFinite()) {
                throw InstabilityError("run_filter: non-finite density", cfg.dt,
                                       max_stable_dt(cfg.params, cfg.grid.spacing()));
            }
            ++step;
        }
        record(cur);
    }
    if (snap_steps.empty()) record(cur);
    return result;
}

void write_observation_csv(std::ostream& out, const ObservationPath& path) {
    const bool with_truth = path.has_truth();
    out << (with_truth ? "t,dY,X\n" : "t,dY\n");
    char buf[96];
    for (std::size_t i = 0; i <= path.steps(); ++i) {
        const double dy = i == 0 ? 0.0 : path.increments[i - 1];
        if (with_truth) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", path.time_at(i),
                          dy, path.truth[i]);
        } else {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", path.time_at(i), dy);
        }
        out << buf;
    }
}

ObservationPath read_observation_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ConfigError("observation csv: empty stream");
    }
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(item);
        return parts;
    };
    const auto header = split(line);
    int t_col = -1, dy_col = -1, x_col = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "t") t_col = static_cast<int>(i);
        if (header[i] == "dY") dy_col = static_cast<int>(i);
        if (header[i] == "X" || header[i] == "X_truth") x_col = static_cast<int>(i);
    }
    if (t_col < 0 || dy_col < 0) {
        throw ConfigError("observation csv: header must contain t and dY columns");
    }

    std::vector<double> times, dys, xs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto parts = split(line);
        times.push_back(std::stod(parts.at(static_cast<std::size_t>(t_col))));
        dys.push_back(std::stod(parts.at(static_cast<std::size_t>(dy_col))));
        if (x_col >= 0) xs.push_back(std::stod(parts.at(static_cast<std::size_t>(x_col))));
    }
    if (times.size() < 2) {
        throw ConfigError("observation csv: need at least two time levels");
    }

    ObservationPath path;
    path.t0 = times.front();
    path.dt = times[1] - times[0];
    if (!(path.dt > 0.0)) throw ConfigError("observation csv: times must increase");
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double expected = path.t0 + static_cast<double>(i) * path.dt;
        if (std::fabs(times[i] - expected) > 1e-9 * std::max(1.0, std::fabs(expected))) {
            throw ConfigError("observation csv: times must be uniformly spaced");
        }
        path.increments.push_back(dys[i]);
    }
    path.truth = std::move(xs);
    return path;
}

}  // namespace tfpe
