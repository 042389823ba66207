#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tfpe/drift.hpp"
#include "tfpe/fpe_solver.hpp"
#include "tfpe/grid.hpp"
#include "tfpe/tempered_levy.hpp"

namespace tfpe {

/// Observation function h of dY = h(X) dt + dW. Cosine is the built-in used
/// by the bistable example; noise_intensity is 1 for the standard Brownian
/// observation noise (test fixtures may zero it).
struct ObservationModel {
    enum class Kind { Cosine, Polynomial };

    Kind kind = Kind::Cosine;
    std::vector<double> coeffs;
    double noise_intensity = 1.0;

    static ObservationModel cosine() { return ObservationModel{}; }
    static ObservationModel polynomial(std::vector<double> c) {
        return ObservationModel{Kind::Polynomial, std::move(c), 1.0};
    }

    double operator()(double x) const {
        if (kind == Kind::Cosine) return std::cos(x);
        double r = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
        return r;
    }
};

/// Uniformly spaced observation record: increments[i] = Y(t0 + (i+1) dt) -
/// Y(t0 + i dt). When present, truth holds the hidden signal at every time
/// level (increments.size() + 1 entries).
struct ObservationPath {
    double t0 = 0.0;
    double dt = 0.0;
    double y0 = 0.0;
    std::vector<double> increments;
    std::vector<double> truth;

    std::size_t steps() const { return increments.size(); }
    double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
    bool has_truth() const { return !truth.empty(); }
};

/// Simulates the coupled signal-observation system with independent signal
/// and observation noise streams derived from the seed.
ObservationPath simulate_signal_observation(const DriftSpec& drift,
                                            const TemperedStableParams& params,
                                            const ObservationModel& obs, double x0,
                                            double y0, double dt, double t_final,
                                            std::uint64_t seed, double epsilon);

/// One splitting step of the Zakai equation: an Euler prediction step of the
/// forward operator followed by the exponential (log-Euler) correction
/// P_j <- P_j exp(h(x_j) dY - h(x_j)^2 dt / 2).
DensityField zakai_step(const SolverConfig& cfg, const ObservationModel& obs,
                        const DensityField& field, double d_y);

struct FilterResult {
    std::vector<DensityField> unnormalized;
    std::vector<DensityField> posterior;   ///< unnormalized / total_mass
    std::vector<double> normalizations;    ///< the masses divided out
};

/// Runs the splitting filter across the observation increments and reports
/// snapshots at the requested times (which must land on the observation
/// grid). The unnormalized field is the evolving state.
FilterResult run_filter(const SolverConfig& cfg, const ObservationModel& obs,
                        const DensityField& p0, const ObservationPath& path,
                        const std::vector<double>& snapshot_times);

/// CSV serialization (columns t, dY, X when truth is recorded; the first row
/// carries dY = 0 by convention so rows align with time levels).
void write_observation_csv(std::ostream& out, const ObservationPath& path);
ObservationPath read_observation_csv(std::istream& in);

}  // namespace tfpe
