#include "jscc/binary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jscc/special.hpp"

namespace jscc {

namespace {

constexpr double kSqrt2OverPi = 0.7978845608028653558798921198687637;
constexpr double kLogSqrt2Pi = 0.9189385332046727417803297364056176;

double log_std_normal_pdf(double x) { return -0.5 * x * x - kLogSqrt2Pi; }

// log of S = 2 phi(u) Q(-lambda u), the skew-normal density.
double log_skew_pdf(double u, double lambda) {
  return std::log(2.0) + log_std_normal_pdf(u) +
         log_std_normal_tail(-lambda * u);
}

}  // namespace

SourceChannelConfig::SourceChannelConfig(double sx, double sz, double p)
    : sigma_x(sx), sigma_z(sz), power(p) {
  if (!(sx > 0.0) || !(sz > 0.0) || !(p > 0.0))
    throw std::invalid_argument("sigma_x, sigma_z, power must be positive");
}

PiecewiseLinearEncoder::PiecewiseLinearEncoder(double a, double b)
    : alpha(a), beta(b) {
  if (!(a >= 0.0) || !(b >= 0.0))
    throw std::invalid_argument("encoder gains must be nonnegative");
}

double PiecewiseLinearEncoder::varsigma() const {
  return std::sqrt(1.0 + alpha * alpha);
}

DesignTarget::DesignTarget(double p) : pe(p) {
  if (!(p > 0.0 && p < 0.5))
    throw std::invalid_argument("target pe must lie in (0, 0.5)");
}

PeBelowRangeError::PeBelowRangeError(double pe_, double pe_min_)
    : std::domain_error("PeBelowRange: target pe " + std::to_string(pe_) +
                        " below the Pareto floor Q(sqrt(SNR)) = " +
                        std::to_string(pe_min_)),
      pe(pe_),
      pe_min(pe_min_) {}

double encode(double x_tilde, const PiecewiseLinearEncoder& enc) {
  const double s = (x_tilde < 0.0) ? -1.0 : 1.0;  // sign(0) := +1
  return enc.alpha * x_tilde + enc.beta * s;
}

double decode_mmse(double w_tilde, const PiecewiseLinearEncoder& enc) {
  const double alpha = enc.alpha;
  const double beta = enc.beta;
  if (beta == 0.0) return alpha * w_tilde / (1.0 + alpha * alpha);
  if (alpha == 0.0) return kSqrt2OverPi * std::tanh(beta * w_tilde);
  if (w_tilde < 0.0) return -decode_mmse(-w_tilde, enc);  // odd function

  // All terms are scaled by the dominant skew-normal weight so the ratio
  // stays finite when the raw densities underflow.
  const double vs = enc.varsigma();
  const double u_plus = (w_tilde - beta) / vs;
  const double u_minus = (w_tilde + beta) / vs;
  const double log_s_plus = log_skew_pdf(u_plus, alpha);
  const double log_s_minus = log_skew_pdf(u_minus, -alpha);
  const double m = std::max(log_s_plus, log_s_minus);
  const double s_plus = std::exp(log_s_plus - m);
  const double s_minus = std::exp(log_s_minus - m);

  // First numerator term via the difference-of-Gaussians identity:
  // exp(-(w^2+b^2)/2) sinh(wb) = [exp(-(w-b)^2/2) - exp(-(w+b)^2/2)] / 2.
  const double log_ea = -0.5 * (w_tilde - beta) * (w_tilde - beta);
  const double log_eb = -0.5 * (w_tilde + beta) * (w_tilde + beta);
  const double n1 =
      -std::expm1(log_eb - log_ea) * std::exp(log_ea - m) / (M_PI * vs);

  const double n2 = alpha / (vs * vs) *
                    ((w_tilde + beta) * s_minus + (w_tilde - beta) * s_plus);
  return (n1 + n2) / (s_plus + s_minus);
}

double decode_denormalized(double w, const PiecewiseLinearEncoder& enc,
                           const SourceChannelConfig& cfg) {
  return cfg.sigma_x * decode_mmse(w / cfg.sigma_z, enc);
}

int classify(double w_tilde) { return w_tilde > 0.0 ? 1 : 0; }

double risk_closed_form(const PiecewiseLinearEncoder& enc) {
  return skew_normal_cdf(-enc.beta / enc.varsigma(), SkewShape(enc.alpha));
}

double normalized_power(const PiecewiseLinearEncoder& enc) {
  return enc.alpha * enc.alpha +
         2.0 * enc.alpha * enc.beta * kSqrt2OverPi + enc.beta * enc.beta;
}

double mmse_linear(double alpha) { return 1.0 / (1.0 + alpha * alpha); }

double mmse_tanh_bound(double beta) {
  const double b2 = beta * beta;
  const double xi = -b2 * std::sqrt(M_PI) / std::sqrt(2.0 + M_PI * b2);
  const SkewShape shape(1.0 / std::sqrt(1.0 + M_PI * b2));
  return (M_PI - 2.0) / M_PI + 8.0 / M_PI * skew_normal_cdf(xi, shape);
}

ParetoRange pareto_range(double snr) {
  if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
  const double root = std::sqrt(snr);
  return {std_normal_tail(root), std::atan(1.0 / root) / M_PI};
}

double beta_from_alpha(double alpha, double snr) {
  if (!(alpha >= 0.0) || alpha * alpha > snr)
    throw std::domain_error("alpha must lie in [0, sqrt(SNR)]");
  const double radicand = snr - alpha * alpha * (1.0 - 2.0 / M_PI);
  return std::max(0.0, -alpha * kSqrt2OverPi + std::sqrt(radicand));
}

double design_equation_lhs(double alpha, double snr) {
  const PiecewiseLinearEncoder enc(alpha, beta_from_alpha(alpha, snr));
  return risk_closed_form(enc);
}

DesignSolution design(const SourceChannelConfig& cfg, DesignTarget target) {
  const double snr = cfg.snr();
  const ParetoRange range = pareto_range(snr);
  constexpr double kGuard = 1e-8;
  if (target.pe < range.pe_min - kGuard)
    throw PeBelowRangeError(target.pe, range.pe_min);

  const double alpha_max = std::sqrt(snr);
  if (target.pe >= range.pe_max) {
    const PiecewiseLinearEncoder enc(alpha_max, 0.0);
    return {alpha_max, 0.0, risk_closed_form(enc),
            risk_closed_form(enc) - target.pe, true};
  }

  auto f = [&](double a) { return design_equation_lhs(a, snr) - target.pe; };
  double lo = 0.0, hi = alpha_max;
  double flo = f(lo), fhi = f(hi);
  if (flo >= 0.0) {
    // Target at (or numerically inside the guard band of) the lower corner.
    const PiecewiseLinearEncoder enc(0.0, beta_from_alpha(0.0, snr));
    return {0.0, enc.beta, risk_closed_form(enc), flo, false};
  }
  // Bisection, guaranteed by the monotonicity of the design equation.
  for (int i = 0; i < 200 && hi - lo > 1e-14 * alpha_max; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  // Secant polish.
  double a = (std::abs(flo) < std::abs(fhi)) ? lo : hi;
  for (int i = 0; i < 4; ++i) {
    const double fa = f(a);
    if (fa == 0.0 || fhi == flo) break;
    const double step = fa * (hi - lo) / (fhi - flo);
    const double next = std::clamp(a - step, 0.0, alpha_max);
    if (next == a) break;
    a = next;
  }
  const double beta = beta_from_alpha(a, snr);
  const PiecewiseLinearEncoder enc(a, beta);
  const double risk = risk_closed_form(enc);
  return {a, beta, risk, risk - target.pe, false};
}

}  // namespace jscc
