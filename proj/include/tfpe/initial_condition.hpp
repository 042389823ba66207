#pragma once

#include <cmath>

#include "tfpe/errors.hpp"
#include "tfpe/grid.hpp"
#include "tfpe/rng.hpp"

namespace tfpe {

/// Initial density family shared by the solver and the path sampler.
/// gaussian(a, b): p(x,0) = sqrt(a/pi) exp(-a (x-b)^2); point(x0): unit mass
/// at x0 (discrete delta on a grid, constant x0 for paths).
struct InitialCondition {
    enum class Kind { Gaussian, Point };

    Kind kind = Kind::Gaussian;
    double sharpness = 40.0;  // gaussian "a"
    double center = 0.0;      // gaussian "b" / point x0

    static InitialCondition gaussian(double a, double b) {
        if (!(a > 0.0)) throw ConfigError("initial gaussian: sharpness must be > 0");
        return InitialCondition{Kind::Gaussian, a, b};
    }
    static InitialCondition point(double x0) {
        return InitialCondition{Kind::Point, 0.0, x0};
    }

    double density(double x) const {
        if (kind != Kind::Gaussian) {
            throw ConfigError("initial point mass has no pointwise density");
        }
        const double d = x - center;
        return std::sqrt(sharpness / 3.14159265358979323846) *
               std::exp(-sharpness * d * d);
    }

    double sample(Xoshiro256pp& rng) const {
        if (kind == Kind::Point) return center;
        return center + rng.normal() / std::sqrt(2.0 * sharpness);
    }
};

/// Project the initial condition onto a grid. A point mass becomes the
/// discrete delta e_j / h at the nearest node.
inline DensityField initial_field(const Grid1D& grid, const InitialCondition& ic) {
    if (ic.kind == InitialCondition::Kind::Gaussian) {
        return sampled_field(grid, [&](double x) { return ic.density(x); });
    }
    DensityField out = zero_field(grid);
    const int j = static_cast<int>(std::lround(ic.center / grid.spacing()));
    if (j < grid.min_index() || j > grid.max_index()) {
        throw ConfigError("initial point mass lies outside the grid");
    }
    out.values[grid.storage(j)] = 1.0 / grid.spacing();
    return out;
}

}  // namespace tfpe
