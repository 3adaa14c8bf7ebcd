// SPDX-License-Identifier: MIT

#include "crlink/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "crlink/errors.hpp"

namespace crlink::sf {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;  // 1/sqrt(2*pi)
constexpr double kLn2 = 0.6931471805599453;
constexpr double kEulerGamma = 0.5772156649015329;
constexpr double kLogDblMax = 709.782712893384;

double poly_eval(const double* c, int n, double x) {
  double r = c[0];
  for (int i = 1; i < n; ++i) r = r * x + c[i];
  return r;
}

// Rational approximation for the standard normal quantile (Acklam form),
// accurate to ~1.15e-9 before refinement.
double norm_quantile_seed(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    return poly_eval(c, 6, q) / (poly_eval(d, 4, q) * q + 1.0);
  }
  if (p <= 1.0 - plow) {
    double q = p - 0.5;
    double r = q * q;
    return poly_eval(a, 6, r) * q / (poly_eval(b, 5, r) * r + 1.0);
  }
  double q = std::sqrt(-2.0 * std::log1p(-p));
  return -poly_eval(c, 6, q) / (poly_eval(d, 4, q) * q + 1.0);
}

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

// I0 power series sum_{k} (x^2/4)^k / (k!)^2; used for x < 20.
double i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 60; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

// Asymptotic tail sum for e^{-x} I0(x) * sqrt(2 pi x); used for x >= 20,
// where the smallest term is far below double precision.
double i0_asymptotic_p(double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 30; ++k) {
    double f = (2.0 * k - 1.0);
    double next = term * f * f / (8.0 * k * x);
    if (next >= term) break;  // divergent tail reached
    term = next;
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

// Regularized lower incomplete gamma by series (x < s + 1).
double gamma_p_series(double s, double x) {
  double ap = s;
  double del = 1.0 / s;
  double sum = del;
  for (int i = 0; i < 10000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-17) {
      return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
  }
  throw convergence_error("gamma_p_series: no convergence");
}

// Regularized upper incomplete gamma by continued fraction (x >= s + 1).
double gamma_q_cf(double s, double x) {
  const double fpmin = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 10000; ++i) {
    double an = -static_cast<double>(i) * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) {
      return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
  }
  throw convergence_error("gamma_q_cf: no convergence");
}

}  // namespace

double gaussian_q(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double gaussian_q_inv(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("gaussian_q_inv: p must lie in (0,1)");
  }
  // Q^{-1}(p) = -Phi^{-1}(p) by the symmetry of the standard normal.
  double x = -norm_quantile_seed(p);
  for (int it = 0; it < 3; ++it) {
    double pdf = norm_pdf(x);
    if (pdf < 1e-290) break;  // beyond refinement range; seed is as good as it gets
    double step = (gaussian_q(x) - p) / pdf;
    x += step;
    if (std::fabs(step) < 1e-14 * (1.0 + std::fabs(x))) break;
  }
  return x;
}

double bessel_i0(double x) {
  if (x < 0.0) throw std::domain_error("bessel_i0: x must be >= 0");
  if (x < 20.0) return i0_series(x);
  const double scaled = i0_asymptotic_p(x) * kInvSqrt2Pi / std::sqrt(x);
  if (x + std::log(scaled) > kLogDblMax) {
    throw std::overflow_error("bessel_i0: result exceeds double range; use bessel_i0_scaled");
  }
  if (x <= 709.0) return std::exp(x) * scaled;
  // e^x alone overflows although e^x * scaled does not; split the exponent.
  return (std::exp(x - 350.0) * scaled) * std::exp(350.0);
}

double bessel_i0_scaled(double x) {
  if (x < 0.0) throw std::domain_error("bessel_i0_scaled: x must be >= 0");
  if (x < 20.0) return std::exp(-x) * i0_series(x);
  return i0_asymptotic_p(x) * kInvSqrt2Pi / std::sqrt(x);
}

double marcum_q1(double a, double b, const SeriesControl& ctl) {
  if (a < 0.0 || b < 0.0) throw std::domain_error("marcum_q1: a, b must be >= 0");
  if (b == 0.0) return 1.0;
  const double x = 0.5 * a * a;  // Poisson mixing rate over the noncentrality
  const double y = 0.5 * b * b;  // Erlang tail evaluation point
  if (a == 0.0) return std::exp(-y);
  // Saturation guards: the classic single-exponential Marcum bounds give
  // Q1 <= e^{-(b-a)^2/2} for b > a and 1 - Q1 <= e^{-(a-b)^2/2} for a > b;
  // at |a-b| = 41 both are below the smallest positive double.
  if (b - a >= 41.0) return 0.0;
  if (a - b >= 41.0) return 1.0;

  // Q1 = sum_k Pois(k; x) * P(Gamma(k+1,1) > y). Start the sum at k0 near the
  // Poisson bulk when x is large enough that e^{-x} underflows.
  long k0 = 0;
  double pois, erl, tj;
  if (x > 500.0) {
    k0 = static_cast<long>(x - 12.0 * std::sqrt(x) - 30.0);
    if (k0 < 0) k0 = 0;
  }
  if (k0 == 0) {
    pois = std::exp(-x);
    tj = std::exp(-y);
    erl = tj;
  } else {
    pois = std::exp(-x + k0 * std::log(x) - std::lgamma(k0 + 1.0));
    erl = upper_incomplete_gamma_regularized(k0 + 1.0, y);
    tj = std::exp(-y + k0 * std::log(y) - std::lgamma(k0 + 1.0));
  }
  double sum = pois * erl;
  double cum = pois;
  for (int i = 1; i <= ctl.max_terms; ++i) {
    const double k = static_cast<double>(k0 + i);
    pois *= x / k;
    tj *= y / k;
    erl += tj;
    if (erl > 1.0) erl = 1.0;
    sum += pois * erl;
    cum += pois;
    // Remaining Poisson tail mass bounds the truncation error (erl <= 1).
    if (k > x && 1.0 - cum <= ctl.rel_tol * sum) {
      return sum > 1.0 ? 1.0 : sum;
    }
  }
  throw convergence_error("marcum_q1: series cap reached before convergence");
}

double expint_e1(double x) {
  if (x <= 0.0) throw std::domain_error("expint_e1: x must be > 0");
  if (x > 745.0) return 0.0;  // e^{-x} underflow; true value below double range
  if (x <= 1.0) {
    double sum = 0.0, term = 1.0;
    for (int k = 1; k <= 60; ++k) {
      term *= -x / k;
      double add = -term / k;
      sum += add;
      if (std::fabs(add) < 1e-17 * (std::fabs(sum) + 1.0)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  return std::exp(-x) * expint_e1_scaled(x);
}

double expint_e1_scaled(double x) {
  if (x <= 0.0) throw std::domain_error("expint_e1_scaled: x must be > 0");
  if (x <= 1.0) return std::exp(x) * expint_e1(x);
  // Modified Lentz continued fraction: E1(x) = e^{-x}/(x+1- 1/(x+3- 4/(...))).
  const double fpmin = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 20000; ++i) {
    double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) return h;
  }
  throw convergence_error("expint_e1_scaled: continued fraction did not converge");
}

double exp_integral_ei(double x) {
  if (x == 0.0) throw std::domain_error("exp_integral_ei: logarithmic singularity at 0");
  if (x < 0.0) return -expint_e1(-x);
  if (x <= 40.0) {
    double sum = 0.0, term = 1.0;
    for (int k = 1; k <= 200; ++k) {
      term *= x / k;
      sum += term / k;
      if (term / k < 1e-17 * (std::fabs(sum) + 1.0) && k > 3) break;
    }
    return kEulerGamma + std::log(x) + sum;
  }
  // Asymptotic e^x/x * sum k!/x^k, truncated at the smallest term.
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 400; ++k) {
    double next = term * k / x;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  if (x - std::log(x) + std::log(sum) > kLogDblMax) {
    throw std::overflow_error("exp_integral_ei: result exceeds double range");
  }
  return std::exp(x) / x * sum;
}

double upper_incomplete_gamma_regularized(double s, double x) {
  if (s <= 0.0) throw std::domain_error("upper_incomplete_gamma: s must be > 0");
  if (x < 0.0) throw std::domain_error("upper_incomplete_gamma: x must be >= 0");
  if (x == 0.0) return 1.0;
  if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
  return gamma_q_cf(s, x);
}

double upper_incomplete_gamma(double s, double x) {
  const double q = upper_incomplete_gamma_regularized(s, x);
  const double lg = std::lgamma(s);
  if (lg > kLogDblMax || (q > 0.0 && lg + std::log(q) > kLogDblMax)) {
    throw std::overflow_error("upper_incomplete_gamma: value exceeds double range");
  }
  return q * std::exp(lg);
}

double hyp2f1(double a, double b, double c, double z, const SeriesControl& ctl) {
  if (z > 0.0) throw std::domain_error("hyp2f1: only z <= 0 is supported");
  if (c <= 0.0 && c == std::floor(c)) {
    throw std::domain_error("hyp2f1: c must not be a nonpositive integer");
  }
  if (z == 0.0) return 1.0;
  if (z < -0.25) {
    // Pfaff transformation maps z into [0, 1): 2F1(a,b;c;z) =
    // (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)), with positive series terms.
    const double zt = z / (z - 1.0);
    double term = 1.0, sum = 1.0;
    const double bp = c - b;
    for (int k = 0; k < ctl.max_terms; ++k) {
      term *= (a + k) * (bp + k) / ((c + k) * (k + 1.0)) * zt;
      sum += term;
      if (term == 0.0 || std::fabs(term) < ctl.rel_tol * std::fabs(sum)) {
        return std::pow(1.0 - z, -a) * sum;
      }
    }
    throw convergence_error("hyp2f1: transformed series cap reached");
  }
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (term == 0.0 || std::fabs(term) < ctl.rel_tol * std::fabs(sum)) return sum;
  }
  throw convergence_error("hyp2f1: series cap reached");
}

}  // namespace crlink::sf
