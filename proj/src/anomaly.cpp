#include "jscc/anomaly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jscc/special.hpp"

namespace jscc {

namespace {

constexpr double kSqrtPiOver2 = 1.2533141373155002512078826424055226;

// Mills ratio Q(x)/phi(x) for large positive x.
double mills_ratio(double x) { return kSqrtPiOver2 * erfcx(x * M_SQRT1_2); }

// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
template <typename F>
double bisect(const F& f, double lo, double hi, double flo) {
  for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

NormalityModel::NormalityModel(double t_) : t(t_) {
  if (!(t > 0.0)) throw std::invalid_argument("truncation threshold t must be positive");
}

double NormalityModel::theta() const { return 1.0 - 2.0 * std_normal_tail(t); }

ContaminationModel::ContaminationModel(double eps, double m_)
    : epsilon(eps), m(m_) {
  if (!(eps >= 0.0 && eps <= 0.1))
    throw std::invalid_argument("contamination prior must lie in [0, 0.1]");
}

double ContaminationModel::pi_ok(const NormalityModel& model) const {
  return model.theta() * (1.0 - epsilon);
}

double ContaminationModel::pi_ko(const NormalityModel& model) const {
  return 1.0 - pi_ok(model);
}

double ContaminationModel::tau(const NormalityModel& model) const {
  return epsilon / pi_ko(model);
}

ADEncoder::ADEncoder(double a, double b, double d)
    : alpha(a), beta(b), delta(d) {
  if (!(a >= 0.0) || !(b >= 0.0) || !(d >= 0.0))
    throw std::invalid_argument("encoder gains must be nonnegative");
}

double ADEncoder::varsigma() const { return std::sqrt(1.0 + alpha * alpha); }
double ADEncoder::vartheta() const { return std::sqrt(1.0 + beta * beta); }

DetectorConfig::DetectorConfig(double p) : psi(p) {
  if (!(p >= 0.0)) throw std::invalid_argument("threshold psi must be nonnegative");
}

NoRootInBracketError::NoRootInBracketError(const std::string& what)
    : std::runtime_error("NoRootInBracket: " + what) {}

TargetUnreachableError::TargetUnreachableError(double pe_, double lo, double hi)
    : std::runtime_error("TargetUnreachable: pe " + std::to_string(pe_) +
                         " outside achievable risk interval [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]"),
      pe(pe_),
      risk_lo(lo),
      risk_hi(hi) {}

double encode_ad(double x_tilde, const ADEncoder& enc,
                 const NormalityModel& model) {
  if (std::abs(x_tilde) <= model.t) return enc.alpha * x_tilde;
  const double s = (x_tilde < 0.0) ? -1.0 : 1.0;
  return enc.beta * x_tilde + enc.delta * s;
}

double power_ad(const ADEncoder& enc, const NormalityModel& model) {
  const double t = model.t;
  const double theta = model.theta();
  const double phi_t = std_normal_pdf(t);
  const double q_t = std_normal_tail(t);
  const double snr_ok =
      enc.alpha * enc.alpha * (1.0 - 2.0 * t * phi_t / theta);
  const double snr_ko = 2.0 *
                        (enc.beta * (t * enc.beta + 2.0 * enc.delta) * phi_t +
                         (enc.beta * enc.beta + enc.delta * enc.delta) * q_t) /
                        (1.0 - theta);
  return theta * snr_ok + (1.0 - theta) * snr_ko;
}

double decode_ok(double w_tilde, double alpha, const NormalityModel& model) {
  if (w_tilde < 0.0) return -decode_ok(-w_tilde, alpha, model);  // odd
  const double vs = std::sqrt(1.0 + alpha * alpha);
  const double a = alpha * w_tilde / vs;
  const double u = a - model.t * vs;
  const double v = a + model.t * vs;
  double ratio;  // [phi(u) - phi(v)] / [Q(u) - Q(v)]
  if (u < 8.0) {
    ratio = (std_normal_pdf(u) - std_normal_pdf(v)) /
            (std_normal_tail(u) - std_normal_tail(v));
  } else {
    // Both tails are deep; divide through by phi(u) and use Mills ratios.
    const double rho = std::exp(0.5 * (u - v) * (u + v));  // phi(v)/phi(u)
    ratio = -std::expm1(0.5 * (u - v) * (u + v)) /
            (mills_ratio(u) - rho * mills_ratio(v));
  }
  return alpha * w_tilde / (vs * vs) - ratio / vs;
}

double anomaly_score(double w_tilde, double alpha,
                     const NormalityModel& model) {
  const double w = std::abs(w_tilde);
  const double vs = std::sqrt(1.0 + alpha * alpha);
  const double u = alpha * w / vs - model.t * vs;
  const double v = alpha * w / vs + model.t * vs;
  double log_q;
  if (u < 8.0) {
    log_q = std::log(std_normal_tail(u) - std_normal_tail(v));
  } else {
    const double lu = log_std_normal_tail(u);
    const double lv = log_std_normal_tail(v);
    log_q = lu + std::log1p(-std::exp(lv - lu));
  }
  return 0.5 * w * w / (vs * vs) - log_q;
}

int detect(double w_tilde, const DetectorConfig& det) {
  return std::abs(w_tilde) > det.psi ? 1 : 0;
}

double fpr(const DetectorConfig& det, double alpha,
           const NormalityModel& model) {
  const double vs = std::sqrt(1.0 + alpha * alpha);
  const Correlation rho(-alpha / vs);
  const double h = -det.psi / vs;
  const double v = 2.0 *
                   (bvn_cdf(h, model.t, rho) - bvn_cdf(h, -model.t, rho)) /
                   model.theta();
  return std::clamp(v, 0.0, 1.0);
}

double fnr_tails(const DetectorConfig& det, const ADEncoder& enc,
                 const NormalityModel& model) {
  if (enc.beta == 0.0) return fnr_sign(det, enc.delta);
  const double vt = enc.vartheta();
  // Correlation +beta/vartheta: the integrand Phi(delta + psi - beta*eta)
  // has eta coefficient -beta, so omega/sqrt(1-omega^2) = +beta.
  const Correlation rho(enc.beta / vt);
  const double kp = (enc.delta + det.psi) / vt;
  const double km = (enc.delta - det.psi) / vt;
  const double v = 2.0 *
                   (bvn_cdf(kp, -model.t, rho) - bvn_cdf(km, -model.t, rho)) /
                   (1.0 - model.theta());
  return std::clamp(v, 0.0, 1.0);
}

double fnr_sign(const DetectorConfig& det, double delta) {
  return std_normal_tail(delta - det.psi) - std_normal_tail(delta + det.psi);
}

double fnr_uniform(const DetectorConfig& det, const ADEncoder& enc,
                   const NormalityModel& model,
                   const ContaminationModel& contamination) {
  if (enc.beta == 0.0) return fnr_sign(det, enc.delta);
  const double t = model.t;
  const double m = contamination.m;
  if (!(m > t))
    throw std::invalid_argument("uniform anomaly bound m must exceed t");
  const double kp = enc.delta + det.psi;
  const double km = enc.delta - det.psi;
  const double b = enc.beta;
  const double v = (g_aux(kp + b * m) - g_aux(kp + b * t) +
                    g_aux(km + b * t) - g_aux(km + b * m)) /
                   (b * (m - t));
  return std::clamp(v, 0.0, 1.0);
}

ADRiskBreakdown risk_ad(const DetectorConfig& det, const ADEncoder& enc,
                        const NormalityModel& model,
                        const ContaminationModel& contamination) {
  ADRiskBreakdown out{};
  out.fpr = fpr(det, enc.alpha, model);
  out.fnr_tails = fnr_tails(det, enc, model);
  const double tau = contamination.tau(model);
  out.fnr_unknown =
      (contamination.epsilon > 0.0)
          ? fnr_uniform(det, enc, model, contamination)
          : 0.0;
  out.fnr = (1.0 - tau) * out.fnr_tails + tau * out.fnr_unknown;
  out.risk = contamination.pi_ok(model) * out.fpr +
             contamination.pi_ko(model) * out.fnr;
  return out;
}

double risk_derivative(const DetectorConfig& det, const ADEncoder& enc,
                       const NormalityModel& model) {
  const double psi = det.psi;
  const double t = model.t;
  const double vs = enc.varsigma();
  const double vt = enc.vartheta();
  const double a = enc.alpha * psi / vs;
  const double fpr_term = 2.0 / vs * std_normal_pdf(psi / vs) *
                          (std_normal_tail(a + t * vs) -
                           std_normal_tail(a - t * vs));
  const double kp = enc.delta + psi;
  const double km = enc.delta - psi;
  const double fnr_term =
      2.0 / vt * std_normal_pdf(kp / vt) *
          std_normal_tail((t * vt * vt + enc.beta * kp) / vt) +
      2.0 / vt * std_normal_pdf(km / vt) *
          std_normal_tail((t * vt * vt + enc.beta * km) / vt);
  return fpr_term + fnr_term;
}

DetectorConfig bayes_threshold(const ADEncoder& enc,
                               const NormalityModel& model) {
  if (enc.beta != 0.0)
    throw std::invalid_argument("bayes_threshold requires beta = 0");
  auto deriv = [&](double psi) {
    return risk_derivative(DetectorConfig(psi), enc, model);
  };
  const double psi_max = enc.delta + 10.0;
  const int n_scan = 512;
  double prev_psi = 1e-9;
  double prev_f = deriv(prev_psi);
  for (int i = 1; i <= n_scan; ++i) {
    const double psi = psi_max * static_cast<double>(i) / n_scan;
    const double f = deriv(psi);
    if ((prev_f < 0.0) != (f < 0.0)) {
      return DetectorConfig(bisect(deriv, prev_psi, psi, prev_f));
    }
    prev_psi = psi;
    prev_f = f;
  }
  throw NoRootInBracketError(
      "risk derivative has no sign change on (0, delta + 10)");
}

double delta_from_alpha(double alpha, double snr,
                        const NormalityModel& model) {
  const double t = model.t;
  const double c = model.theta() - 2.0 * t * std_normal_pdf(t);  // E[x^2; ok]
  const double rem = snr - alpha * alpha * c;
  if (!(alpha >= 0.0) || rem < 0.0)
    throw std::domain_error("alpha infeasible: power budget exceeded");
  return std::sqrt(rem / (1.0 - model.theta()));
}

ADDesign design_ad(const SourceChannelConfig& cfg, DesignTarget target,
                   const NormalityModel& model) {
  const double snr = cfg.snr();
  const double t = model.t;
  const double theta = model.theta();
  const double c = theta - 2.0 * t * std_normal_pdf(t);
  const double alpha_max = std::sqrt(snr / c);

  // Risk of the epsilon = 0 system designed at linear gain alpha, with its
  // power-saturating delta and Bayes threshold.
  auto risk_at = [&](double alpha) {
    const double delta = delta_from_alpha(alpha, snr, model);
    const ADEncoder enc(alpha, 0.0, delta);
    const DetectorConfig det = bayes_threshold(enc, model);
    return theta * fpr(det, alpha, model) +
           (1.0 - theta) * fnr_sign(det, delta);
  };

  const int n_scan = 64;
  const double eps_a = 1e-9 * alpha_max;
  std::vector<double> roots;
  double risk_lo = std::numeric_limits<double>::infinity();
  double risk_hi = -risk_lo;
  double prev_alpha = eps_a;
  bool prev_ok = true;
  double prev_f = 0.0;
  try {
    prev_f = risk_at(prev_alpha) - target.pe;
    risk_lo = std::min(risk_lo, prev_f + target.pe);
    risk_hi = std::max(risk_hi, prev_f + target.pe);
  } catch (const NoRootInBracketError&) {
    prev_ok = false;
  }
  for (int i = 1; i <= n_scan; ++i) {
    const double alpha = eps_a + (alpha_max - 2.0 * eps_a) * i / n_scan;
    double f = 0.0;
    bool ok = true;
    try {
      f = risk_at(alpha) - target.pe;
      risk_lo = std::min(risk_lo, f + target.pe);
      risk_hi = std::max(risk_hi, f + target.pe);
    } catch (const NoRootInBracketError&) {
      ok = false;
    }
    if (ok && prev_ok && (prev_f < 0.0) != (f < 0.0)) {
      auto g = [&](double a) { return risk_at(a) - target.pe; };
      roots.push_back(bisect(g, prev_alpha, alpha, prev_f));
    }
    if (ok) {
      prev_alpha = alpha;
      prev_f = f;
    }
    prev_ok = ok;
  }
  if (roots.empty()) throw TargetUnreachableError(target.pe, risk_lo, risk_hi);

  const double alpha = roots.front();
  const double delta = delta_from_alpha(alpha, snr, model);
  const ADEncoder enc(alpha, 0.0, delta);
  const DetectorConfig det = bayes_threshold(enc, model);
  const double risk =
      theta * fpr(det, alpha, model) + (1.0 - theta) * fnr_sign(det, delta);
  ADDesign out;
  out.alpha = alpha;
  out.delta = delta;
  out.psi = det.psi;
  out.risk_residual = risk - target.pe;
  out.stationarity_residual = risk_derivative(det, enc, model);
  out.degenerate = alpha < 1e-6 * alpha_max || delta < 1e-6;
  out.alpha_roots = std::move(roots);
  return out;
}

RiskInterval achievable_risk_ad(const SourceChannelConfig& cfg,
                                const NormalityModel& model) {
  const double snr = cfg.snr();
  const double theta = model.theta();
  const double c = theta - 2.0 * model.t * std_normal_pdf(model.t);
  const double alpha_max = std::sqrt(snr / c);
  const int n_scan = 64;
  const double eps_a = 1e-9 * alpha_max;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i <= n_scan; ++i) {
    const double alpha = eps_a + (alpha_max - 2.0 * eps_a) * i / n_scan;
    const double delta = delta_from_alpha(alpha, snr, model);
    const ADEncoder enc(alpha, 0.0, delta);
    try {
      const DetectorConfig det = bayes_threshold(enc, model);
      const double risk = theta * fpr(det, alpha, model) +
                          (1.0 - theta) * fnr_sign(det, delta);
      lo = std::min(lo, risk);
      hi = std::max(hi, risk);
    } catch (const NoRootInBracketError&) {
      // Degenerate operating point (flag-nothing limit); not achievable by
      // an interior stationary threshold, so it does not extend the range.
    }
  }
  if (!std::isfinite(lo)) {
    throw NoRootInBracketError(
        "no power-feasible gain admits an interior Bayes threshold");
  }
  return {lo, hi};
}

}  // namespace jscc
