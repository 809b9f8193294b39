#ifndef JSCC_BINARY_HPP
#define JSCC_BINARY_HPP

#include <stdexcept>

namespace jscc {

// Source/channel/power parameters in physical units.
struct SourceChannelConfig {
  SourceChannelConfig(double sigma_x, double sigma_z, double power);
  double sigma_x;  // source std
  double sigma_z;  // noise std
  double power;    // average transmit power
  double snr() const { return power / (sigma_z * sigma_z); }
};

// Normalized piecewise-linear encoder gains: g(x) = alpha*x + beta*sign(x).
struct PiecewiseLinearEncoder {
  PiecewiseLinearEncoder(double alpha, double beta);
  double alpha;
  double beta;
  double varsigma() const;  // sqrt(1 + alpha^2)
};

struct DesignTarget {
  explicit DesignTarget(double pe);
  double pe;
};

struct DesignSolution {
  double alpha;
  double beta;
  double achieved_risk;
  double solver_residual;
  bool degenerate;  // true when the target sits at/above the trivial corner
};

struct ParetoRange {
  double pe_min;  // Q(sqrt(SNR))
  double pe_max;  // arccot(sqrt(SNR)) / pi
};

class PeBelowRangeError : public std::domain_error {
 public:
  PeBelowRangeError(double pe, double pe_min);
  double pe;
  double pe_min;
};

// Normalized encoder output; sign(0) is taken as +1.
double encode(double x_tilde, const PiecewiseLinearEncoder& enc);

// MMSE decoder estimate x_hat/sigma_x for the piecewise-linear encoder.
// Odd in w_tilde; evaluated in a tail-stable form for large |w_tilde|.
double decode_mmse(double w_tilde, const PiecewiseLinearEncoder& enc);

double decode_denormalized(double w, const PiecewiseLinearEncoder& enc,
                           const SourceChannelConfig& cfg);

// Optimal Bayes classifier: 1 iff w_tilde > 0.
int classify(double w_tilde);

// Classification risk Phi_SN(-beta/sqrt(1+alpha^2); alpha).
double risk_closed_form(const PiecewiseLinearEncoder& enc);

// Normalized transmit power alpha^2 + 2 alpha beta sqrt(2/pi) + beta^2.
double normalized_power(const PiecewiseLinearEncoder& enc);

// MMSE of the linear system: 1/(1+alpha^2).
double mmse_linear(double alpha);

// Tight upper bound on the MMSE of the sign-only system (erf surrogate).
double mmse_tanh_bound(double beta);

ParetoRange pareto_range(double snr);

// Offset that saturates the power constraint at a given linear gain.
double beta_from_alpha(double alpha, double snr);

// Left-hand side of the design equation: the risk at the power-saturating
// (alpha, beta(alpha)) pair. Strictly increasing in alpha.
double design_equation_lhs(double alpha, double snr);

// Solves the design equation by bisection on alpha in [0, sqrt(SNR)] with a
// secant polish. Throws PeBelowRangeError when pe < Q(sqrt(SNR)); targets
// above arccot(sqrt(SNR))/pi return the trivial (sqrt(SNR), 0) solution
// flagged degenerate.
DesignSolution design(const SourceChannelConfig& cfg, DesignTarget target);

}  // namespace jscc

#endif
