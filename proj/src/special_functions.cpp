#include "tfpe/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tfpe {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

// Alternating-series acceleration of Cohen, Rodriguez Villegas and Zagier
// applied to eta(s) = sum_{k>=0} (-1)^k (k+1)^{-s}. Converges like
// (3+sqrt(8))^{-n} for any real s on our segment.
double eta_accelerated(double s) {
    constexpr int n = 48;
    const double t = std::pow(3.0 + 2.0 * std::sqrt(2.0), n);
    const double d = 0.5 * (t + 1.0 / t);
    double b = -1.0;
    double c = -d;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(static_cast<double>(k + 1), -s);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return sum / d;
}

// zeta(u) = eta(u) / (1 - 2^{1-u}) for u in [0, 2], u != 1.
double zeta_from_eta(double u) {
    const double denom = -std::expm1((1.0 - u) * kLn2);  // 1 - 2^{1-u}
    return eta_accelerated(u) / denom;
}

// gamma(a, x) via the all-positive-term series
//   gamma(a,x) = x^a e^{-x} sum_{n>=0} x^n / (a (a+1) ... (a+n)),  a > 0.
double lower_gamma_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 600; ++n) {
        term *= x / (a + n);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return std::pow(x, a) * std::exp(-x) * sum;
}

// Gamma(a, x) by the modified Lentz continued fraction; reliable for
// x >= ~1 over a in (-2, 2].
double upper_gamma_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double f = d;
    for (int n = 1; n < 600; ++n) {
        const double an = -n * (n - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x)) * f;
}

}  // namespace

double riemann_zeta(double s) {
    if (!(s >= -1.0 && s < 1.0)) {
        throw std::domain_error("riemann_zeta: argument " + std::to_string(s) +
                                " outside [-1, 1)");
    }
    if (s >= 0.0) return zeta_from_eta(s);
    // Reflection: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s).
    const double sp = 1.0 - s;  // in (1, 2]
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(0.5 * kPi * s) *
           std::tgamma(sp) * zeta_from_eta(sp);
}

double upper_incomplete_gamma(double a, double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("upper_incomplete_gamma: x must be > 0, got " +
                                std::to_string(x));
    }
    if (!(a > -2.0 && a <= 1.0) || a == 0.0 || a == -1.0) {
        throw std::domain_error(
            "upper_incomplete_gamma: parameter " + std::to_string(a) +
            " outside the supported range (-2, 1] \\ {0, -1}");
    }
    if (x >= 1.5) return upper_gamma_cf(a, x);

    const int lifts = a > 0.0 ? 0 : (a > -1.0 ? 1 : 2);
    const double a_top = a + lifts;
    double g = std::tgamma(a_top) - lower_gamma_series(a_top, x);
    const double emx = std::exp(-x);
    for (int i = lifts; i >= 1; --i) {
        const double ai = a + (i - 1);
        g = (g - std::pow(x, ai) * emx) / ai;
    }
    return g;
}

double lower_incomplete_gamma(double a, double x) {
    if (!(a > 0.0)) {
        throw std::domain_error("lower_incomplete_gamma: a must be > 0");
    }
    if (x < 0.0) {
        throw std::domain_error("lower_incomplete_gamma: x must be >= 0");
    }
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return lower_gamma_series(a, x);
    return std::tgamma(a) - upper_gamma_cf(a, x);
}

double tempered_tail_weight(double alpha, double lambda, double s) {
    if (!((alpha > 0.0 && alpha < 1.0) || (alpha > 1.0 && alpha < 2.0))) {
        throw std::domain_error("tempered_tail_weight: alpha " +
                                std::to_string(alpha) +
                                " outside (0,1) u (1,2)");
    }
    if (!(lambda > 0.0)) {
        throw std::domain_error("tempered_tail_weight: lambda must be > 0");
    }
    if (!(s > 0.0)) {
        throw std::domain_error("tempered_tail_weight: s must be > 0");
    }
    return std::pow(lambda, alpha) * upper_incomplete_gamma(-alpha, lambda * s);
}

}  // namespace tfpe
