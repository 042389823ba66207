#include "tfpe/tempered_levy.hpp"

#include <cmath>
#include <stdexcept>

#include "tfpe/errors.hpp"
#include "tfpe/special_functions.hpp"

namespace tfpe {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;

bool alpha_admissible(double alpha) {
    return (alpha > 0.0 && alpha < 1.0) || (alpha > 1.0 && alpha < 2.0);
}
}  // namespace

double default_c_alpha(double alpha) {
    if (!alpha_admissible(alpha)) {
        throw std::domain_error("default_c_alpha: alpha " + std::to_string(alpha) +
                                " outside (0,1) u (1,2)");
    }
    return alpha * std::pow(2.0, alpha - 1.0) * std::tgamma(0.5 * (1.0 + alpha)) /
           (kSqrtPi * std::tgamma(1.0 - 0.5 * alpha));
}

std::vector<std::string> parameter_violations(const TemperedStableParams& p) {
    std::vector<std::string> v;
    if (!alpha_admissible(p.alpha)) {
        v.push_back("alpha must lie in (0,1) u (1,2), got " + std::to_string(p.alpha));
    }
    if (!(p.lambda > 0.0)) {
        v.push_back("lambda must be > 0, got " + std::to_string(p.lambda));
    }
    if (!(p.c_alpha >= 0.0)) {
        v.push_back("c_alpha must be >= 0, got " + std::to_string(p.c_alpha));
    }
    return v;
}

void validate_params(const TemperedStableParams& p) {
    const auto v = parameter_violations(p);
    if (v.empty()) return;
    std::string msg = "invalid tempered stable parameters:";
    for (const auto& s : v) msg += " [" + s + "]";
    throw ConfigError(msg);
}

double levy_density(const TemperedStableParams& p, double y) {
    validate_params(p);
    if (y == 0.0) {
        throw std::domain_error("levy_density: singular at y = 0");
    }
    const double ay = std::fabs(y);
    return p.c_alpha * std::exp(-p.lambda * ay) * std::pow(ay, -1.0 - p.alpha);
}

double second_moment_rate(const TemperedStableParams& p) {
    validate_params(p);
    return 2.0 * p.c_alpha * std::pow(p.lambda, p.alpha - 2.0) *
           std::tgamma(2.0 - p.alpha);
}

double truncated_second_moment(const TemperedStableParams& p, double eps) {
    validate_params(p);
    if (!(eps > 0.0)) {
        throw std::domain_error("truncated_second_moment: eps must be > 0");
    }
    return 2.0 * p.c_alpha * std::pow(p.lambda, p.alpha - 2.0) *
           lower_incomplete_gamma(2.0 - p.alpha, p.lambda * eps);
}

double tail_mass(const TemperedStableParams& p, double eps) {
    validate_params(p);
    if (!(eps > 0.0)) {
        throw std::domain_error("tail_mass: eps must be > 0");
    }
    if (p.c_alpha == 0.0) return 0.0;
    return 2.0 * p.c_alpha * tempered_tail_weight(p.alpha, p.lambda, eps);
}

}  // namespace tfpe
