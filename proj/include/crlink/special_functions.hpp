// SPDX-License-Identifier: MIT
//
// Scalar special-function kernels used by every closed form in the library:
// Gaussian tail and its inverse, modified Bessel I0, first-order Marcum Q,
// exponential integrals, incomplete gamma, and the Gauss hypergeometric
// function for nonpositive argument. All functions are pure and reentrant;
// identical inputs give bit-identical results on one platform.

#pragma once

#include <cstdint>

namespace crlink::sf {

// Truncation policy for the series-based kernels: stop once the current term
// drops below rel_tol times the partial sum, or fail after max_terms.
struct SeriesControl {
  double rel_tol = 1e-12;
  int max_terms = 500;
};

// Standard normal tail probability Q(x) = P(Z > x). Strictly decreasing,
// range (0,1) on finite x (underflows to 0 for x beyond ~38).
double gaussian_q(double x);

// Inverse of gaussian_q on (0,1). Rational initial guess refined by Newton
// steps; round-trips through gaussian_q to better than 1e-12 relative.
// Throws std::domain_error for p outside (0,1).
double gaussian_q_inv(double p);

// Modified Bessel function of the first kind, order zero, x >= 0.
// Throws std::domain_error for x < 0 and std::overflow_error once e^x growth
// exceeds double range (x > ~714).
double bessel_i0(double x);

// Exponentially scaled variant e^{-x} I0(x); finite for all x >= 0.
double bessel_i0_scaled(double x);

// First-order Marcum Q function Q1(a, b) = P(sqrt(X) > b), X noncentral
// chi-square with 2 degrees of freedom and noncentrality a^2. In [0,1],
// decreasing in b, increasing in a; Q1(a,0) = 1. Series evaluation with a
// shifted start for large a^2/2; throws crlink::convergence_error when the
// term cap is reached (distinct from std::domain_error for negative inputs).
// For |a-b| >= 41 the value is saturated to 0 or 1; the neglected mass is
// below the smallest positive double (standard Marcum tail bounds).
double marcum_q1(double a, double b, const SeriesControl& ctl = {});

// Exponential integral Ei(x), x != 0. For x < 0 equals -E1(-x). Throws
// std::domain_error at x = 0 and std::overflow_error for x > ~716.
double exp_integral_ei(double x);

// E1(x) for x > 0; series below 1, continued fraction above.
double expint_e1(double x);

// Scaled product e^x E1(x) for x > 0; finite for arbitrarily large x and the
// form every capacity expression actually consumes.
double expint_e1_scaled(double x);

// Upper incomplete gamma Gamma(s, x), s > 0, x >= 0 (non-regularized).
// Equals (s-1)! e^{-x} sum_{k<s} x^k/k! for integer s. Throws
// std::overflow_error when Gamma(s) itself is not representable.
double upper_incomplete_gamma(double s, double x);

// Regularized upper incomplete gamma Q(s, x) = Gamma(s,x)/Gamma(s) in [0,1];
// stable for large s where the non-regularized value overflows.
double upper_incomplete_gamma_regularized(double s, double x);

// Gauss hypergeometric 2F1(a, b; c; z) for z <= 0 (the only argument range
// the channel model produces). Arguments with z < -1/4 are mapped through the
// Pfaff transformation into a positive-term series. Throws std::domain_error
// for z > 0 or c a nonpositive integer, crlink::convergence_error on cap.
double hyp2f1(double a, double b, double c, double z, const SeriesControl& ctl = {});

}  // namespace crlink::sf
