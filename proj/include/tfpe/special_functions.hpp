#pragma once

namespace tfpe {

/// Riemann zeta on the real segment [-1, 1).
///
/// Evaluated through the accelerated Dirichlet eta series; arguments in
/// [-1, 0) go through the reflection formula first. Values on this segment
/// are strictly negative, which the stability bound of the finite-difference
/// scheme relies on. Arguments outside [-1, 1) are refused.
double riemann_zeta(double s);

/// Upper incomplete gamma Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt
/// for a in (-2, 1], a not in {0, -1}, and x > 0.
///
/// Negative a is lifted with Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a
/// until the parameter is positive; the positive-parameter value comes from
/// the regularized series (small x) or a continued fraction (large x).
/// Relative accuracy is about 1e-12 over the range used by the solver.
double upper_incomplete_gamma(double a, double x);

/// Lower incomplete gamma gamma(a, x) = int_0^x t^{a-1} e^{-t} dt for a > 0,
/// x >= 0. Used for truncated second moments of the jump measure.
double lower_incomplete_gamma(double a, double x);

/// Tail integral of the tempered stable kernel,
///   int_s^inf e^{-lambda y} y^{-(1+alpha)} dy  =  lambda^alpha Gamma(-alpha, lambda s),
/// for alpha in (0,1) u (1,2), lambda > 0, s > 0. This is the same quantity
/// the scheme's boundary weights W1/W2 express through the Whittaker W
/// function; the incomplete-gamma form is better conditioned.
double tempered_tail_weight(double alpha, double lambda, double s);

}  // namespace tfpe
