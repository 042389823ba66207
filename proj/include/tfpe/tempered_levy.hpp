#pragma once

#include <string>
#include <vector>

namespace tfpe {

/// Parameters of the symmetric 1-d tempered stable jump measure
///   nu(dy) = c_alpha e^{-lambda |y|} |y|^{-1-alpha} dy.
struct TemperedStableParams {
    double alpha;    ///< stability index, in (0,1) u (1,2)
    double lambda;   ///< tempering rate (1/length), > 0
    double c_alpha;  ///< measure normalization, >= 0 (0 = jumpless fixture)
};

/// Standard symmetric-stable normalization
/// C_alpha = alpha 2^{alpha-1} Gamma((1+alpha)/2) / (sqrt(pi) Gamma(1-alpha/2)).
double default_c_alpha(double alpha);

/// All parameter constraints violated by `p` (empty when valid).
/// c_alpha = 0 is accepted as the degenerate no-jump configuration.
std::vector<std::string> parameter_violations(const TemperedStableParams& p);

/// Throws ConfigError listing every violated constraint.
void validate_params(const TemperedStableParams& p);

/// Density of nu with respect to Lebesgue measure; even in y, singular at 0.
double levy_density(const TemperedStableParams& p, double y);

/// int y^2 nu(dy) = 2 c_alpha lambda^{alpha-2} Gamma(2-alpha); the variance
/// of L_t grows linearly at this rate.
double second_moment_rate(const TemperedStableParams& p);

/// int_{|y|<=eps} y^2 nu(dy), the small-jump variance rate used by the
/// Gaussian compensation in the increment sampler.
double truncated_second_moment(const TemperedStableParams& p, double eps);

/// nu({|y| > eps}) = 2 c_alpha * tempered_tail_weight(alpha, lambda, eps),
/// the arrival rate of jumps larger than eps.
double tail_mass(const TemperedStableParams& p, double eps);

}  // namespace tfpe
