#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "tfpe/drift.hpp"
#include "tfpe/grid.hpp"
#include "tfpe/initial_condition.hpp"
#include "tfpe/rng.hpp"
#include "tfpe/tempered_levy.hpp"

namespace tfpe {

struct McConfig {
    TemperedStableParams params;
    DriftSpec drift;
    InitialCondition initial = InitialCondition::gaussian(40.0, 0.0);
    long n_paths = 100000;
    double dt = 0.01;
    double t_final = 1.0;
    double jump_cutoff = 0.01;  ///< epsilon: jumps below it become Gaussian
    std::uint64_t seed = 12345;
};

/// Draws time-dt increments of the tempered stable process: jumps larger
/// than eps as a compound Poisson stream (Pareto proposal, exponential
/// tempering acceptance), smaller jumps folded into a centered Gaussian with
/// the matching truncated second moment.
class IncrementSampler {
public:
    IncrementSampler(const TemperedStableParams& params, double dt, double eps);

    /// One increment; optionally reports the number of large jumps drawn.
    double sample(Xoshiro256pp& rng, long* jump_count = nullptr) const;

    double jump_rate() const { return rate_; }                  ///< Lambda(eps)
    double small_jump_variance_rate() const { return sigma2_; } ///< sigma^2(eps)
    double dt() const { return dt_; }

private:
    double alpha_ = 0.0;
    double lambda_ = 0.0;
    double eps_ = 0.0;
    double dt_ = 0.0;
    double rate_ = 0.0;
    double sigma2_ = 0.0;
    double gauss_scale_ = 0.0;  // sqrt(dt * sigma^2)
};

/// Spec-level wrapper around IncrementSampler::sample.
double sample_increment(const TemperedStableParams& params, double dt, double eps,
                        Xoshiro256pp& rng);

struct PathEnsemble {
    Eigen::ArrayXd terminal;  ///< finite terminal positions, path order kept
    long dropped = 0;         ///< non-finite paths excluded
};

/// Euler scheme X_{n+1} = X_n + f(X_n) dt + dL_n per path; each path owns the
/// stream (seed, path index), so output is reproducible bit-for-bit under any
/// worker count.
PathEnsemble simulate_paths(const McConfig& cfg);

struct EmpiricalDensity {
    DensityField field;
    double escaped_fraction = 0.0;
    long retained = 0;
};

/// Histogram on the grid cells [x_j - h/2, x_j + h/2) (half cells at the
/// window ends), normalized so total_mass equals the retained fraction of
/// samples exactly.
EmpiricalDensity empirical_density(const Eigen::ArrayXd& samples, const Grid1D& grid);

/// h * sum_j |P_j - Q_j|.
double l1_distance(const Grid1D& grid, const DensityField& p, const DensityField& q);

}  // namespace tfpe
