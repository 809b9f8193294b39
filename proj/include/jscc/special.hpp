#ifndef JSCC_SPECIAL_HPP
#define JSCC_SPECIAL_HPP

#include <stdexcept>

namespace jscc {

// Correlation coefficient of a bivariate standard normal, restricted to the
// open interval (-1, 1). Construction with |rho| >= 1 throws.
class Correlation {
 public:
  explicit Correlation(double rho);
  double value() const { return rho_; }

 private:
  double rho_;
};

// Shape parameter of the skew-normal distribution. Any finite value.
class SkewShape {
 public:
  explicit SkewShape(double lambda);
  double value() const { return lambda_; }

 private:
  double lambda_;
};

// Standard normal density phi(xi) = exp(-xi^2/2)/sqrt(2*pi).
double std_normal_pdf(double xi);

// Tail function Q(xi) = integral of phi over [xi, inf). Computed through the
// complementary error function so relative accuracy survives in deep tails.
double std_normal_tail(double xi);

// log Q(xi), valid far beyond the underflow point of Q itself.
double log_std_normal_tail(double xi);

// Scaled complementary error function exp(x^2) * erfc(x).
double erfcx(double x);

// Inverse of the standard normal CDF (Wichura's AS241 algorithm).
double inverse_std_normal_cdf(double p);

// Owen's T function T(h, a) = (1/2pi) int_0^a exp(-h^2(1+s^2)/2)/(1+s^2) ds.
// Absolute accuracy ~1e-13.
double owen_t(double h, double a);

// Skew-normal density 2 phi(xi) Q(-lambda xi).
double skew_normal_pdf(double xi, SkewShape shape);

// Skew-normal CDF Q(-xi) - 2 T(xi, lambda).
double skew_normal_cdf(double xi, SkewShape shape);

// Bivariate standard normal CDF, evaluated through the single-integral form
//   Phi2(xi, omega; rho) = int_{-inf}^{xi} Q[(rho s - omega)/sqrt(1-rho^2)] phi(s) ds.
// Absolute accuracy better than 1e-10.
double bvn_cdf(double xi, double omega, Correlation rho);

// G(xi) = xi Q(-xi) + phi(xi).
double g_aux(double xi);

}  // namespace jscc

#endif
