#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tfpe/grid.hpp"

namespace tfpe {

/// Polynomial drift f(x) = sum c_k x^k (ascending coefficients). The zero
/// drift is the empty/all-zero polynomial.
class DriftSpec {
public:
    DriftSpec() = default;

    static DriftSpec zero() { return DriftSpec(); }

    static DriftSpec polynomial(std::vector<double> coeffs) {
        DriftSpec d;
        d.coeffs_ = std::move(coeffs);
        d.trim();
        return d;
    }

    /// The bistable drift x - x^3 (gradient of the double-well potential).
    static DriftSpec bistable() { return polynomial({0.0, 1.0, 0.0, -1.0}); }

    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<double>& coefficients() const { return coeffs_; }

    double operator()(double x) const {
        double r = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    /// g(x) = factor * f(scale * x + shift) as an explicit polynomial.
    DriftSpec affine_transformed(double scale, double shift, double factor) const {
        if (is_zero()) return zero();
        // Horner over polynomial coefficients: r(x) = r(x)*(scale x + shift) + c_k.
        std::vector<double> r;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            std::vector<double> next(r.size() + 1, 0.0);
            for (std::size_t k = 0; k < r.size(); ++k) {
                next[k + 1] += r[k] * scale;
                next[k] += r[k] * shift;
            }
            next[0] += coeffs_[i];
            r = std::move(next);
        }
        for (auto& c : r) c *= factor;
        return polynomial(std::move(r));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
    }
    std::vector<double> coeffs_;
};

/// max_j |f(x_j)| over every node of the grid (the global Lax-Friedrichs
/// speed M).
inline double max_abs_drift(const DriftSpec& drift, const Grid1D& grid) {
    if (drift.is_zero()) return 0.0;
    double m = 0.0;
    for (int j = grid.min_index(); j <= grid.max_index(); ++j) {
        const double a = std::fabs(drift(grid.x(j)));
        if (a > m) m = a;
    }
    return m;
}

}  // namespace tfpe
