#include "tfpe/fpe_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tfpe/errors.hpp"
#include "tfpe/parallel.hpp"
#include "tfpe/special_functions.hpp"

namespace tfpe {

DomainTransform transform_to_standard(double a, double b,
                                      const TemperedStableParams& params,
                                      const DriftSpec& drift) {
    if (!(a < b)) {
        throw ConfigError("transform_to_standard: need a < b, got a=" +
                          std::to_string(a) + " b=" + std::to_string(b));
    }
    validate_params(params);
    DomainTransform t;
    t.a = a;
    t.b = b;
    const double s = 0.5 * (b - a);
    t.params = TemperedStableParams{params.alpha, s * params.lambda,
                                    std::pow(s, -params.alpha) * params.c_alpha};
    t.drift = drift.affine_transformed(s, 0.5 * (a + b), 1.0 / s);
    return t;
}

FluxSplit flux_split(const DriftSpec& drift, const Grid1D& grid,
                     const DensityField& field) {
    if (field.values.size() != grid.node_count()) {
        throw ConfigError("flux_split: field not aligned to grid");
    }
    FluxSplit out;
    const int n = grid.node_count();
    if (drift.is_zero()) {
        out.plus = Eigen::ArrayXd::Zero(n);
        out.minus = Eigen::ArrayXd::Zero(n);
        return out;
    }
    Eigen::ArrayXd f(n);
    for (int i = 0; i < n; ++i) f[i] = drift(grid.x(grid.min_index() + i));
    out.max_speed = f.abs().maxCoeff();
    const Eigen::ArrayXd fp = f * field.values;
    out.plus = 0.5 * (fp + out.max_speed * field.values);
    out.minus = 0.5 * (fp - out.max_speed * field.values);
    return out;
}

double max_stable_dt(const TemperedStableParams& params, double h) {
    validate_params(params);
    if (!(h > 0.0)) throw ConfigError("max_stable_dt: h must be > 0");
    if (params.c_alpha == 0.0) return std::numeric_limits<double>::infinity();
    const double z = riemann_zeta(params.alpha - 1.0);
    return std::pow(h, params.alpha) /
           (2.0 * params.c_alpha * (1.0 + 1.0 / params.alpha - z));
}

double advective_dt_bound(const DriftSpec& drift, const Grid1D& grid) {
    const double m = max_abs_drift(drift, grid);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return grid.spacing() / (2.0 * m);
}

double recommended_dt(const TemperedStableParams& params, const Grid1D& grid,
                      const DriftSpec& drift, double safety_factor) {
    if (!(safety_factor > 0.0 && safety_factor <= 1.0)) {
        throw ConfigError("recommended_dt: safety factor must lie in (0, 1]");
    }
    return safety_factor * std::min(max_stable_dt(params, grid.spacing()),
                                    advective_dt_bound(drift, grid));
}

FpeStepper::FpeStepper(SolverConfig cfg) : cfg_(std::move(cfg)) {
    validate_params(cfg_.params);
    const Grid1D& g = cfg_.grid;
    const int J = g.half_span();
    const double h = g.spacing();
    const double alpha = cfg_.params.alpha;
    const double lambda = cfg_.params.lambda;
    const double c = cfg_.params.c_alpha;

    // Kernel weights at node distances 1 .. 2J-1 plus prefix sums for the
    // diagonal of the punched trapezoidal sum.
    kernel_ = Eigen::ArrayXd::Zero(2 * J);
    kernel_cum_ = Eigen::ArrayXd::Zero(2 * J);
    for (int d = 1; d < 2 * J; ++d) {
        const double y = d * h;
        kernel_[d] = std::exp(-lambda * y) * std::pow(y, -1.0 - alpha);
        kernel_cum_[d] = kernel_cum_[d - 1] + kernel_[d];
    }

    if (g.mode() == GridMode::BoundedAbsorbing) {
        kill_ = Eigen::ArrayXd::Zero(2 * J + 1);
        for (int j = -J + 1; j < J; ++j) {
            const double x = g.x(j);
            kill_[j + J] = c * (tempered_tail_weight(alpha, lambda, 1.0 + x) +
                                tempered_tail_weight(alpha, lambda, 1.0 - x));
        }
    }

    drift_vals_ = Eigen::ArrayXd::Zero(g.node_count());
    if (!cfg_.drift.is_zero()) {
        for (int i = 0; i < g.node_count(); ++i) {
            drift_vals_[i] = cfg_.drift(g.x(g.min_index() + i));
        }
        max_speed_ = drift_vals_.abs().maxCoeff();
    }

    second_diff_coeff_ = -c * riemann_zeta(alpha - 1.0) * std::pow(h, -alpha);
    sum_coeff_ = c * h;
}

Eigen::ArrayXd FpeStepper::rhs(const DensityField& field) const {
    const Grid1D& g = cfg_.grid;
    if (field.values.size() != g.node_count()) {
        throw ConfigError("rhs: field not aligned to grid");
    }
    const int J = g.half_span();
    const int wn = 2 * J + 1;                 // window nodes -J..J
    const int ws = g.storage(-J);
    const double h = g.spacing();

    Eigen::ArrayXd out = Eigen::ArrayXd::Zero(g.node_count());

    // Window copy with the trapezoidal end weights folded in; a reversed copy
    // makes both halves of the gather contiguous dot products.
    Eigen::VectorXd q = field.values.segment(ws, wn).matrix();
    q[0] *= 0.5;
    q[wn - 1] *= 0.5;
    Eigen::VectorXd qr = q.reverse();

    const Eigen::VectorXd& w = kernel_.matrix();
    const bool bounded = g.mode() == GridMode::BoundedAbsorbing;

    Eigen::ArrayXd adv;
    if (!cfg_.drift.is_zero()) {
        const Eigen::ArrayXd fp = drift_vals_ * field.values;
        const Eigen::ArrayXd plus = 0.5 * (fp + max_speed_ * field.values);
        const Eigen::ArrayXd minus = 0.5 * (fp - max_speed_ * field.values);
        adv = Eigen::ArrayXd::Zero(g.node_count());
        for (int t = 1; t < wn - 1; ++t) {
            const int i = ws + t;
            adv[i] = (plus[i] - plus[i - 1] + minus[i + 1] - minus[i]) / h;
        }
    }

    const double* pv = field.values.data();
    double* po = out.data();
    parallel_for(wn - 2, [&](long ti) {
        const int t = static_cast<int>(ti) + 1;  // window index, j = t - J
        const int j = t - J;
        // sum'' over k in [-J-j, J-j]\{0}: endpoint weights come in through q,
        // the diagonal through halved prefix sums of the kernel.
        const double left = w.segment(1, t).dot(qr.segment(wn - t, t));
        const double right = w.segment(1, wn - 1 - t).dot(q.segment(t + 1, wn - 1 - t));
        const double diag = kernel_cum_[J + j] + kernel_cum_[J - j] -
                            0.5 * (kernel_[J + j] + kernel_[J - j]);
        const double pj = pv[ws + t];
        double r = sum_coeff_ * (left + right - diag * pj);
        r += second_diff_coeff_ * (pv[ws + t + 1] - 2.0 * pj + pv[ws + t - 1]);
        if (bounded) r -= kill_[t] * pj;
        po[ws + t] = r;
    });

    if (!cfg_.drift.is_zero()) {
        out.segment(ws + 1, wn - 2) -= adv.segment(ws + 1, wn - 2);
    }
    return out;
}

DensityField FpeStepper::step(const DensityField& field, double dt) const {
    DensityField out;
    out.values = field.values + dt * rhs(field);
    out.time = field.time + dt;
    if (cfg_.grid.mode() == GridMode::BoundedAbsorbing) {
        const Grid1D& g = cfg_.grid;
        const int J = g.half_span();
        out.values.head(g.storage(-J) + 1).setZero();
        out.values.tail(g.node_count() - g.storage(J)).setZero();
    }
    if (!out.values.allFinite()) {
        throw InstabilityError("step_euler: non-finite density", dt,
                               max_stable_dt(cfg_.params, cfg_.grid.spacing()));
    }
    return out;
}

namespace {

const SolverConfig& require_mode(const SolverConfig& cfg, GridMode mode,
                                 const char* op) {
    if (cfg.grid.mode() != mode) {
        throw ConfigError(std::string(op) + ": grid mode mismatch");
    }
    return cfg;
}

}  // namespace

Eigen::ArrayXd rhs_bounded(const SolverConfig& cfg, const DensityField& field) {
    return FpeStepper(require_mode(cfg, GridMode::BoundedAbsorbing, "rhs_bounded"))
        .rhs(field);
}

Eigen::ArrayXd rhs_unbounded(const SolverConfig& cfg, const DensityField& field) {
    return FpeStepper(require_mode(cfg, GridMode::TruncatedInfinite, "rhs_unbounded"))
        .rhs(field);
}

DensityField step_euler(const SolverConfig& cfg, const DensityField& field) {
    return FpeStepper(cfg).step(field, cfg.dt);
}

std::vector<DensityField> solve(const SolverConfig& cfg, const DensityField& p0,
                                const std::vector<double>& snapshot_times) {
    if (snapshot_times.empty()) {
        throw ConfigError("solve: no snapshot times requested");
    }
    if (!std::is_sorted(snapshot_times.begin(), snapshot_times.end())) {
        throw ConfigError("solve: snapshot times must be sorted");
    }
    const double t_eps = 1e-12 * std::max(1.0, cfg.t_final);
    if (snapshot_times.front() < p0.time - t_eps) {
        throw ConfigError("solve: snapshot time precedes the initial time");
    }
    if (snapshot_times.back() > cfg.t_final + t_eps) {
        throw ConfigError("solve: snapshot time exceeds t_final");
    }
    const bool stepping_needed = snapshot_times.back() > p0.time + t_eps;
    if (stepping_needed && !(cfg.dt > 0.0)) {
        throw ConfigError("solve: dt must be > 0");
    }

    FpeStepper stepper(cfg);
    const double runaway =
        1e6 * std::max(p0.values.abs().maxCoeff(), std::numeric_limits<double>::min());

    std::vector<DensityField> snapshots;
    snapshots.reserve(snapshot_times.size());
    DensityField cur = p0;
    auto checked_step = [&](double dt_step) {
        cur = stepper.step(cur, dt_step);
        if (cur.values.abs().maxCoeff() > runaway) {
            throw InstabilityError(
                "solve: density exceeded 1e6 x initial max (dt=" +
                    std::to_string(cfg.dt) + ", drift-free bound=" +
                    std::to_string(max_stable_dt(cfg.params, cfg.grid.spacing())) +
                    ")",
                cfg.dt, max_stable_dt(cfg.params, cfg.grid.spacing()));
        }
    };
    for (double target : snapshot_times) {
        // Integer step control keeps the dt sequence independent of
        // accumulated floating-point time, so runs compose exactly.
        const double span = target - cur.time;
        if (span > t_eps) {
            const auto full_steps =
                static_cast<long>(std::floor(span / cfg.dt + 1e-9));
            double remainder = span - static_cast<double>(full_steps) * cfg.dt;
            if (remainder <= t_eps) remainder = 0.0;
            for (long s = 0; s < full_steps; ++s) checked_step(cfg.dt);
            if (remainder > 0.0) checked_step(remainder);
        }
        cur.time = target;
        snapshots.push_back(cur);
    }
    return snapshots;
}

}  // namespace tfpe
