#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "tfpe/special_functions.hpp"

using tfpe::riemann_zeta;
using tfpe::tempered_tail_weight;
using tfpe::upper_incomplete_gamma;

namespace {
double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
}  // namespace

TEST_CASE("oracle zeta reproduces literature values") {
    // Guards the test oracle itself before it is used as a reference.
    CHECK(rel_err(oracle::riemann_zeta(2.0), 1.6449340668482264) < 1e-13);
    CHECK(rel_err(oracle::riemann_zeta(0.5), -1.4603545088095868) < 1e-13);
    CHECK(rel_err(oracle::riemann_zeta(-0.5), -0.2078862249773545660) < 1e-13);
    CHECK(rel_err(oracle::riemann_zeta(-1.0), -1.0 / 12.0) < 1e-12);
}

TEST_CASE("riemann_zeta matches the continuation oracle on [-1, 1)") {
    for (double s = -1.0; s < 1.0; s += 0.05) {
        CHECK(rel_err(riemann_zeta(s), oracle::riemann_zeta(s)) < 1e-12);
    }
    // frozen spot values
    CHECK(riemann_zeta(0.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(rel_err(riemann_zeta(0.5), -1.4603545088095868) < 1e-12);
    CHECK(rel_err(riemann_zeta(-0.5), -0.20788622497735456) < 1e-12);
    CHECK(rel_err(riemann_zeta(-1.0), -0.08333333333333333) < 1e-12);
}

TEST_CASE("riemann_zeta is negative on [-1, 1)") {
    for (double s = -1.0; s < 1.0; s += 0.01) {
        CHECK(riemann_zeta(s) < 0.0);
    }
}

TEST_CASE("riemann_zeta refuses arguments outside [-1, 1)") {
    CHECK_THROWS_AS(riemann_zeta(1.0), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta(1.5), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta(-1.0000001), std::domain_error);
}

TEST_CASE("upper incomplete gamma closed forms") {
    CHECK(rel_err(upper_incomplete_gamma(1.0, 2.0), std::exp(-2.0)) < 1e-13);
    // Gamma(0.5, x) -> Gamma(0.5) = sqrt(pi) as x -> 0+
    CHECK(std::fabs(upper_incomplete_gamma(0.5, 1e-14) - 1.7724538509055160) < 1e-6);
    // Gamma(0.5, x) = sqrt(pi) erfc(sqrt(x))
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 20.0}) {
        const double want = 1.7724538509055160 * std::erfc(std::sqrt(x));
        CHECK(rel_err(upper_incomplete_gamma(0.5, x), want) < 1e-12);
    }
    // Gamma(-0.5, x) = 2 e^{-x}/sqrt(x) - 2 sqrt(pi) erfc(sqrt(x))
    for (double x : {0.2, 1.0, 3.0, 10.0}) {
        const double want = 2.0 * std::exp(-x) / std::sqrt(x) -
                            2.0 * 1.7724538509055160 * std::erfc(std::sqrt(x));
        CHECK(rel_err(upper_incomplete_gamma(-0.5, x), want) < 1e-11);
    }
}

TEST_CASE("upper incomplete gamma matches quadrature for negative parameters") {
    // frozen from the quadrature oracle
    CHECK(rel_err(upper_incomplete_gamma(-0.5, 1.0), 0.17814771178156069) < 1e-10);
    for (double a : {-1.8, -1.5, -1.2, -0.8, -0.5, -0.2, 0.3, 0.7, 1.0}) {
        for (double x : {0.05, 0.3, 1.0, 1.4, 1.6, 3.0, 10.0}) {
            CHECK(rel_err(upper_incomplete_gamma(a, x), oracle::upper_gamma(a, x)) <
                  1e-10);
        }
    }
}

TEST_CASE("recurrence a Gamma(a,x) + x^a e^-x = Gamma(a+1,x)") {
    for (double a : {-1.7, -1.3, -0.9, -0.5, -0.1}) {
        for (double x : {0.1, 0.7, 1.3, 2.5, 8.0}) {
            const double lhs = a * upper_incomplete_gamma(a, x) +
                               std::pow(x, a) * std::exp(-x);
            const double rhs = upper_incomplete_gamma(a + 1.0, x);
            CHECK(rel_err(lhs, rhs) < 1e-10);
        }
    }
}

TEST_CASE("upper incomplete gamma branch continuity near the switch") {
    for (double a : {-1.5, -0.5, 0.5}) {
        const double below = upper_incomplete_gamma(a, 1.4999999);
        const double above = upper_incomplete_gamma(a, 1.5000001);
        CHECK(rel_err(below, above) < 1e-6);
    }
}

TEST_CASE("upper incomplete gamma domain errors") {
    CHECK_THROWS_AS(upper_incomplete_gamma(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(upper_incomplete_gamma(0.5, -1.0), std::domain_error);
    CHECK_THROWS_AS(upper_incomplete_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(upper_incomplete_gamma(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(upper_incomplete_gamma(-2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(upper_incomplete_gamma(1.5, 1.0), std::domain_error);
}

TEST_CASE("tempered tail weight agrees with quadrature over the parameter grid") {
    CHECK(rel_err(tempered_tail_weight(0.5, 1.0, 1.0), 0.17814771178156069) < 1e-10);
    for (double alpha : {0.2, 0.5, 0.8, 1.2, 1.5, 1.8}) {
        for (double lambda : {0.01, 0.1, 1.0}) {
            for (double s : {0.1, 1.0, 2.0}) {
                CHECK(rel_err(tempered_tail_weight(alpha, lambda, s),
                              oracle::tail_weight(alpha, lambda, s)) < 1e-8);
            }
        }
    }
}

TEST_CASE("tempered tail weight untempered limit") {
    // tail -> s^-alpha / alpha as lambda -> 0; at finite lambda the leading
    // deviation is the lambda^alpha Gamma(-alpha) term of the expansion.
    for (double alpha : {0.3, 0.7, 1.4, 1.8}) {
        const double s = 1.5;
        const double lambda = 1e-12;
        const double got = tempered_tail_weight(alpha, lambda, s);
        const double stable_tail = std::pow(s, -alpha) / alpha;
        const double correction = std::pow(lambda, alpha) * std::tgamma(-alpha);
        CHECK(rel_err(got, stable_tail + correction) < 1e-8);
        CHECK(rel_err(got, stable_tail) < 2.0 * std::fabs(correction) / stable_tail +
                                              1e-8);
    }
}

TEST_CASE("tempered tail weight decays to zero far out") {
    CHECK(tempered_tail_weight(0.5, 1.0, 200.0) <= 1e-80);
    CHECK(tempered_tail_weight(0.5, 1.0, 200.0) >= 0.0);
}

TEST_CASE("tempered tail weight is strictly decreasing in s and lambda") {
    for (double alpha : {0.4, 1.3, 1.9}) {
        double prev = tempered_tail_weight(alpha, 0.5, 0.05);
        for (double s = 0.1; s < 3.0; s += 0.1) {
            const double cur = tempered_tail_weight(alpha, 0.5, s);
            CHECK(cur < prev);
            prev = cur;
        }
        prev = tempered_tail_weight(alpha, 0.01, 1.0);
        for (double lambda = 0.05; lambda < 3.0; lambda += 0.07) {
            const double cur = tempered_tail_weight(alpha, lambda, 1.0);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("tempered tail weight domain errors") {
    CHECK_THROWS_AS(tempered_tail_weight(0.5, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(tempered_tail_weight(0.5, 1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(tempered_tail_weight(1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(tempered_tail_weight(0.5, 0.0, 1.0), std::domain_error);
}
