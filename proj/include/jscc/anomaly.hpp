#ifndef JSCC_ANOMALY_HPP
#define JSCC_ANOMALY_HPP

#include <stdexcept>
#include <vector>

#include "jscc/binary.hpp"

namespace jscc {

// Truncated-Gaussian normality region |x_tilde| <= t. The region mass theta
// is always recomputed from t.
struct NormalityModel {
  explicit NormalityModel(double t);
  double t;
  double theta() const;  // 1 - 2 Q(t)
};

// Mixture contamination: with prior epsilon an anomaly comes from a uniform
// law on [-m, -t] u [t, m] instead of the Gaussian tails.
struct ContaminationModel {
  ContaminationModel(double epsilon, double m);
  double epsilon;
  double m;
  double pi_ok(const NormalityModel& model) const;   // theta (1 - epsilon)
  double pi_ko(const NormalityModel& model) const;   // 1 - pi_ok
  double tau(const NormalityModel& model) const;     // epsilon / pi_ko
};

// Three-gain anomaly-detection encoder: alpha inside the normality region,
// beta*x + delta*sign(x) outside it.
struct ADEncoder {
  ADEncoder(double alpha, double beta, double delta);
  double alpha;
  double beta;
  double delta;
  double varsigma() const;  // sqrt(1 + alpha^2)
  double vartheta() const;  // sqrt(1 + beta^2)
};

struct DetectorConfig {
  explicit DetectorConfig(double psi);
  double psi;
};

struct ADRiskBreakdown {
  double fpr;
  double fnr_tails;
  double fnr_unknown;
  double fnr;   // (1 - tau) fnr_tails + tau fnr_unknown
  double risk;  // pi_ok fpr + pi_ko fnr
};

struct ADDesign {
  double alpha;
  double delta;
  double psi;
  double risk_residual;
  double stationarity_residual;
  bool degenerate;
  std::vector<double> alpha_roots;  // every bracketed root, increasing alpha
};

class NoRootInBracketError : public std::runtime_error {
 public:
  explicit NoRootInBracketError(const std::string& what);
};

class TargetUnreachableError : public std::runtime_error {
 public:
  TargetUnreachableError(double pe, double risk_lo, double risk_hi);
  double pe, risk_lo, risk_hi;
};

double encode_ad(double x_tilde, const ADEncoder& enc,
                 const NormalityModel& model);

// Normalized transmit power theta*SNR_ok + (1-theta)*SNR_ko (epsilon = 0).
double power_ad(const ADEncoder& enc, const NormalityModel& model);

// MMSE decoder of the normal (truncated-Gaussian) class; output in (-t, t).
double decode_ok(double w_tilde, double alpha, const NormalityModel& model);

// Negative log-density of the normal-class channel output, up to an additive
// constant; even and strictly increasing in |w_tilde|.
double anomaly_score(double w_tilde, double alpha, const NormalityModel& model);

// 1 iff |w_tilde| > psi.
int detect(double w_tilde, const DetectorConfig& det);

double fpr(const DetectorConfig& det, double alpha,
           const NormalityModel& model);

double fnr_tails(const DetectorConfig& det, const ADEncoder& enc,
                 const NormalityModel& model);

// FNR of sign-only (beta = 0) anomaly encoding; independent of the anomaly
// law: Q(delta - psi) - Q(delta + psi).
double fnr_sign(const DetectorConfig& det, double delta);

// FNR against a uniform anomaly on [-m, -t] u [t, m]; requires beta > 0
// (beta = 0 callers use fnr_sign) and m > t.
double fnr_uniform(const DetectorConfig& det, const ADEncoder& enc,
                   const NormalityModel& model,
                   const ContaminationModel& contamination);

ADRiskBreakdown risk_ad(const DetectorConfig& det, const ADEncoder& enc,
                        const NormalityModel& model,
                        const ContaminationModel& contamination);

// d/dpsi of the epsilon = 0 risk theta*FPR + (1-theta)*FNR_tails.
double risk_derivative(const DetectorConfig& det, const ADEncoder& enc,
                       const NormalityModel& model);

// Bayes-optimal threshold: root of risk_derivative on (0, delta + 10).
// Requires beta = 0 and delta > 0.
DetectorConfig bayes_threshold(const ADEncoder& enc,
                               const NormalityModel& model);

// Offset saturating the power constraint for sign-only anomaly encoding.
double delta_from_alpha(double alpha, double snr, const NormalityModel& model);

// Heuristic design solver (epsilon = 0, beta = 0): nested 1-D root-finding,
// inner psi from the stationarity condition, outer alpha from risk = pe.
ADDesign design_ad(const SourceChannelConfig& cfg, DesignTarget target,
                   const NormalityModel& model);

// Achievable closed-form risk interval over the power-feasible linear gains,
// evaluated on the same grid the design solver scans.  Gains at which the
// stationarity condition has no interior root are skipped.
struct RiskInterval {
  double lo;
  double hi;
};
RiskInterval achievable_risk_ad(const SourceChannelConfig& cfg,
                                const NormalityModel& model);

}  // namespace jscc

#endif
