#pragma once

#include <Eigen/Core>
#include <stdexcept>

#include "tfpe/errors.hpp"

namespace tfpe {

enum class GridMode {
    /// Standard domain (-1,1) with the absorbing condition; nodes x_j = j h
    /// for -2J <= j <= 2J with h = 1/J (the outer band only carries kernel
    /// distances, the density is zero outside (-1,1)).
    BoundedAbsorbing,
    /// Truncation of the whole line to [-L, L]; nodes x_j = j h for
    /// -J <= j <= J with h = L/J.
    TruncatedInfinite,
};

/// Uniform symmetric grid. Node indices j are signed; storage indices are
/// 0-based from min_index().
class Grid1D {
public:
    static Grid1D bounded(int j_half_span) {
        if (j_half_span < 2) throw ConfigError("Grid1D: J must be >= 2");
        return Grid1D(GridMode::BoundedAbsorbing, j_half_span, 1.0 / j_half_span);
    }

    static Grid1D truncated_infinite(double half_width, int j_half_span) {
        if (j_half_span < 2) throw ConfigError("Grid1D: J must be >= 2");
        if (!(half_width > 0.0)) throw ConfigError("Grid1D: half-width must be > 0");
        return Grid1D(GridMode::TruncatedInfinite, j_half_span, half_width / j_half_span);
    }

    GridMode mode() const { return mode_; }
    int half_span() const { return j_; }
    double spacing() const { return h_; }

    /// Extent of the evolved window [-J h, J h]: 1 in bounded mode, L in
    /// truncated mode.
    double window_half_width() const { return j_ * h_; }

    int min_index() const { return mode_ == GridMode::BoundedAbsorbing ? -2 * j_ : -j_; }
    int max_index() const { return -min_index(); }
    int node_count() const { return max_index() - min_index() + 1; }

    double x(int j) const { return j * h_; }
    int storage(int j) const { return j - min_index(); }

    bool in_window(int j) const { return j >= -j_ && j <= j_; }
    bool is_interior(int j) const { return j > -j_ && j < j_; }

    Eigen::ArrayXd nodes() const {
        const int n = node_count();
        Eigen::ArrayXd xs(n);
        for (int i = 0; i < n; ++i) xs[i] = (min_index() + i) * h_;
        return xs;
    }

    bool operator==(const Grid1D& o) const {
        return mode_ == o.mode_ && j_ == o.j_ && h_ == o.h_;
    }

private:
    Grid1D(GridMode m, int j, double h) : mode_(m), j_(j), h_(h) {}
    GridMode mode_;
    int j_;
    double h_;
};

/// Grid-sampled density P_j at one time level, aligned to Grid1D nodes.
struct DensityField {
    Eigen::ArrayXd values;
    double time = 0.0;
};

inline DensityField zero_field(const Grid1D& grid, double time = 0.0) {
    return DensityField{Eigen::ArrayXd::Zero(grid.node_count()), time};
}

/// Sample a pointwise function onto the grid. In bounded mode values outside
/// the open window (-1,1) are forced to zero (absorbing condition).
template <typename F>
DensityField sampled_field(const Grid1D& grid, F&& f, double time = 0.0) {
    DensityField out = zero_field(grid, time);
    for (int j = grid.min_index(); j <= grid.max_index(); ++j) {
        const bool alive = grid.mode() == GridMode::BoundedAbsorbing
                               ? grid.is_interior(j)
                               : true;
        if (alive) out.values[grid.storage(j)] = f(grid.x(j));
    }
    return out;
}

/// Trapezoidal mass h * sum'' P_j over the full node range (end values
/// weighted by 1/2).
inline double total_mass(const Grid1D& grid, const DensityField& field) {
    if (field.values.size() != grid.node_count()) {
        throw ConfigError("total_mass: field not aligned to grid");
    }
    const auto& v = field.values;
    double s = v.sum() - 0.5 * (v[0] + v[v.size() - 1]);
    return grid.spacing() * s;
}

}  // namespace tfpe
