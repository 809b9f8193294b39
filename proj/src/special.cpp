#include "jscc/special.hpp"

#include <algorithm>
#include <cmath>

#include "jscc/quadrature.hpp"

namespace jscc {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;
constexpr double kSqrt2 = 1.4142135623730950488016887242096981;
constexpr double kTwoPi = 6.2831853071795864769252867665590058;

double std_normal_cdf(double xi) { return std_normal_tail(-xi); }

// T(h, a) for h >= 0, 0 < a <= 1, by adaptive quadrature of the defining
// integrand. The integrand is smooth and bounded by 1/(2 pi (1+s^2)).
double owen_t_core(double h, double a) {
  const double h2 = h * h;
  auto integrand = [h2](double s) {
    return std::exp(-0.5 * h2 * (1.0 + s * s)) / (1.0 + s * s) / kTwoPi;
  };
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  return integrate(integrand, 0.0, a, spec);
}

}  // namespace

Correlation::Correlation(double rho) : rho_(rho) {
  if (!(rho > -1.0 && rho < 1.0))
    throw std::invalid_argument("correlation must lie in (-1, 1)");
}

SkewShape::SkewShape(double lambda) : lambda_(lambda) {
  if (!std::isfinite(lambda))
    throw std::invalid_argument("skew shape must be finite");
}

double std_normal_pdf(double xi) {
  return kInvSqrt2Pi * std::exp(-0.5 * xi * xi);
}

double std_normal_tail(double xi) { return 0.5 * std::erfc(xi / kSqrt2); }

double erfcx(double x) {
  if (x < 25.0) return std::exp(x * x) * std::erfc(x);
  // Asymptotic expansion of the scaled tail; relative error < 1e-13 here.
  const double z = 1.0 / (2.0 * x * x);
  double series = 1.0 + z * (-1.0 + z * (3.0 + z * (-15.0 + z * 105.0)));
  return series / (x * std::sqrt(M_PI));
}

double log_std_normal_tail(double xi) {
  if (xi < 20.0) return std::log(std_normal_tail(xi));
  // Q(xi) = phi(xi)/xi * [1 - 1/xi^2 + 3/xi^4 - ...] via erfcx to avoid
  // underflow: Q(xi) = 0.5 erfcx(xi/sqrt(2)) exp(-xi^2/2).
  return std::log(0.5 * erfcx(xi / kSqrt2)) - 0.5 * xi * xi;
}

double inverse_std_normal_cdf(double p) {
  // Wichura's algorithm AS241 (PPND16).
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("inverse normal CDF requires p in (0, 1)");
  const double q = p - 0.5;
  double r;
  if (std::abs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) *
                    r +
                4.5921953931549871457e4) *
                   r +
               1.3731693765509461125e4) *
                  r +
              1.9715909503065514427e3) *
                 r +
             1.3314166789178437745e2) *
                r +
            3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) *
                    r +
                2.1213794301586595867e4) *
                   r +
               5.3941960214247511077e3) *
                  r +
              6.8718700749205790830e2) *
                 r +
             4.2313330701600911252e1) *
                r +
            1.0);
  }
  r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) *
                      r +
                  2.41780725177450611770e-1) *
                     r +
                 1.27045825245236838258e0) *
                    r +
                3.64784832476320460504e0) *
                   r +
               5.76949722146069140550e0) *
                  r +
              4.63033784615654529590e0) *
                 r +
             1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) *
                      r +
                  1.51986665636164571966e-2) *
                     r +
                 1.48103976427480074590e-1) *
                    r +
                6.89767334985100004550e-1) *
                   r +
               1.67638483018380384940e0) *
                  r +
              2.05319162663775882187e0) *
                 r +
             1.0);
  } else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) *
                      r +
                  1.24266094738807843860e-3) *
                     r +
                 2.65321895265761230930e-2) *
                    r +
                2.96560571828504891230e-1) *
                   r +
               1.78482653991729133580e0) *
                  r +
              5.46378491116411436990e0) *
                 r +
             6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r +
                   1.42151175831644588870e-7) *
                      r +
                  1.84631831751005468180e-5) *
                     r +
                 7.86869131145613259100e-4) *
                    r +
                1.48753612908506148525e-2) *
                   r +
               1.36929880922735805310e-1) *
                  r +
              5.99832206555887937690e-1) *
                 r +
             1.0);
  }
  return (q < 0.0) ? -value : value;
}

double owen_t(double h, double a) {
  if (!std::isfinite(h) || !std::isfinite(a))
    throw std::domain_error("owen_t requires finite arguments");
  if (a == 0.0) return 0.0;
  const double sign = (a < 0.0) ? -1.0 : 1.0;  // T(h, -a) = -T(h, a)
  a = std::abs(a);
  h = std::abs(h);  // T(-h, a) = T(h, a)
  if (a <= 1.0) return sign * owen_t_core(h, a);
  // Reduce a > 1 via T(h,a) = Phi(h)/2 + Phi(ah)/2 - Phi(h)Phi(ah) - T(ah,1/a).
  const double ph = std_normal_cdf(h);
  const double pah = std_normal_cdf(a * h);
  const double t = 0.5 * ph + 0.5 * pah - ph * pah - owen_t_core(a * h, 1.0 / a);
  return sign * t;
}

double skew_normal_pdf(double xi, SkewShape shape) {
  return 2.0 * std_normal_pdf(xi) * std_normal_tail(-shape.value() * xi);
}

double skew_normal_cdf(double xi, SkewShape shape) {
  return std_normal_tail(-xi) - 2.0 * owen_t(xi, shape.value());
}

double bvn_cdf(double xi, double omega, Correlation rho) {
  if (!std::isfinite(xi) || !std::isfinite(omega))
    throw std::domain_error("bvn_cdf requires finite arguments");
  const double r = rho.value();
  const double denom = std::sqrt(1.0 - r * r);
  auto integrand = [r, omega, denom](double s) {
    return std_normal_tail((r * s - omega) / denom) * std_normal_pdf(s);
  };
  // phi(s) bounds the integrand; mass outside +-9 is below 1e-18.
  const double hi = std::min(xi, 9.0);
  const double lo = std::min(-9.0, hi - 9.0);
  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  const double v = integrate(integrand, lo, hi, spec);
  return std::clamp(v, 0.0, 1.0);
}

double g_aux(double xi) {
  return xi * std_normal_tail(-xi) + std_normal_pdf(xi);
}

}  // namespace jscc
