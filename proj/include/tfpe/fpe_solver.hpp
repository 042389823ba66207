#pragma once

#include <Eigen/Core>
#include <vector>

#include "tfpe/drift.hpp"
#include "tfpe/grid.hpp"
#include "tfpe/tempered_levy.hpp"

namespace tfpe {

struct SolverConfig {
    TemperedStableParams params;
    Grid1D grid;
    DriftSpec drift;
    double dt = 0.0;
    double t_final = 0.0;
    double safety_factor = 0.9;
};

/// Affine map taking a general interval (a, b) to the standard domain (-1, 1)
/// together with the transformed measure parameters and drift. Solutions map
/// back through u(x_std, t) = p(to_original(x_std), t).
struct DomainTransform {
    double a = -1.0;
    double b = 1.0;
    TemperedStableParams params{};
    DriftSpec drift;

    double scale() const { return 0.5 * (b - a); }
    double to_original(double x_std) const { return scale() * x_std + 0.5 * (a + b); }
    double to_standard(double x_orig) const { return (2.0 * x_orig - (a + b)) / (b - a); }
};

DomainTransform transform_to_standard(double a, double b,
                                      const TemperedStableParams& params,
                                      const DriftSpec& drift);

/// Global Lax-Friedrichs splitting (fP)^± = (f ± M) P / 2 with
/// M = max_j |f(x_j)| over every grid node.
struct FluxSplit {
    Eigen::ArrayXd plus;
    Eigen::ArrayXd minus;
    double max_speed = 0.0;
};

FluxSplit flux_split(const DriftSpec& drift, const Grid1D& grid,
                     const DensityField& field);

/// Maximum-principle time-step bound for the drift-free scheme:
///   dt <= h^alpha / (2 c_alpha (1 + 1/alpha - zeta(alpha-1))).
double max_stable_dt(const TemperedStableParams& params, double h);

/// Advective CFL h / (2M) for the upwinded split fluxes; +inf for zero drift.
double advective_dt_bound(const DriftSpec& drift, const Grid1D& grid);

/// safety_factor * min(max_stable_dt, advective bound).
double recommended_dt(const TemperedStableParams& params, const Grid1D& grid,
                      const DriftSpec& drift, double safety_factor);

/// Precomputed semi-discrete operator. Immutable after construction; rhs()
/// is a pure function of the field and may be called concurrently.
class FpeStepper {
public:
    explicit FpeStepper(SolverConfig cfg);

    const SolverConfig& config() const { return cfg_; }

    /// Semi-discrete right-hand side dP_j/dt. Nodes outside the evolved
    /// window (|j| >= J) get 0.
    Eigen::ArrayXd rhs(const DensityField& field) const;

    /// One explicit Euler substep P + dt * rhs(P); in absorbing mode the
    /// exterior nodes are re-zeroed.
    DensityField step(const DensityField& field, double dt) const;

private:
    SolverConfig cfg_;
    Eigen::ArrayXd kernel_;       // kernel_[d] = e^{-lambda d h} (d h)^{-1-alpha}
    Eigen::ArrayXd kernel_cum_;   // prefix sums of kernel_
    Eigen::ArrayXd kill_;         // c_alpha (W1 + W2) per window node (bounded)
    Eigen::ArrayXd drift_vals_;   // f(x_j) on all nodes
    double max_speed_ = 0.0;
    double second_diff_coeff_ = 0.0;  // -c_alpha zeta(alpha-1) h^{-alpha}
    double sum_coeff_ = 0.0;          // c_alpha h
};

/// Spec-level one-shot wrappers (each builds a stepper; prefer FpeStepper or
/// solve() in loops).
Eigen::ArrayXd rhs_bounded(const SolverConfig& cfg, const DensityField& field);
Eigen::ArrayXd rhs_unbounded(const SolverConfig& cfg, const DensityField& field);
DensityField step_euler(const SolverConfig& cfg, const DensityField& field);

/// Explicit Euler drive to each snapshot time (sorted, absolute). The final
/// substep before a snapshot is shortened to land exactly; throws
/// InstabilityError if the field leaves [finite, 1e6 * initial max].
std::vector<DensityField> solve(const SolverConfig& cfg, const DensityField& p0,
                                const std::vector<double>& snapshot_times);

}  // namespace tfpe
