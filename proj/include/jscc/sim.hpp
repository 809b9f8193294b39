#ifndef JSCC_SIM_HPP
#define JSCC_SIM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jscc/anomaly.hpp"
#include "jscc/binary.hpp"
#include "jscc/quadrature.hpp"

namespace jscc {

// xoshiro256++ seeded through splitmix64. Explicit so that every platform
// and worker count reproduces the same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next_u64();
  double next_uniform();       // (0, 1)
  double next_std_normal();    // Box-Muller
  // Truncated standard normal on [-t, t], inverse-CDF sampling.
  double next_truncated_normal(double t);
  // Gaussian tail |x| > t, random sign.
  double next_gaussian_tail(double t);
  // Uniform on [-m, -t] u [t, m].
  double next_uniform_tail(double t, double m);

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct SimEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
};

enum class Scenario { binary_classification, anomaly_detection };

struct BinarySystem {
  PiecewiseLinearEncoder encoder;
};

struct ADSystem {
  ADEncoder encoder;
  NormalityModel model;
  ContaminationModel contamination;
  DetectorConfig detector;
};

struct SimConfig {
  std::uint64_t n;
  std::uint64_t seed;
  std::variant<BinarySystem, ADSystem> system;
  Scenario scenario() const {
    return std::holds_alternative<BinarySystem>(system)
               ? Scenario::binary_classification
               : Scenario::anomaly_detection;
  }
};

struct ChainResult {
  SimEstimate mse;          // normalized; ok-class only in the AD scenario
  SimEstimate error_rate;   // misclassification / detection risk
  SimEstimate empirical_power;
  std::optional<SimEstimate> fpr;  // AD scenario only
  std::optional<SimEstimate> fnr;
};

// Seeded Monte-Carlo transmission chain: encode, add unit noise, decode,
// classify/detect. Deterministic per (config, seed) and worker count.
ChainResult run_chain(const SimConfig& config);

// Generic MMSE decoder by adaptive quadrature of the posterior-mean ratio
// over the given support intervals. Oracle for decode_mmse and decode_ok.
double quadrature_decoder(double w_tilde,
                          const std::function<double(double)>& encoder_fn,
                          const std::vector<std::pair<double, double>>& support,
                          const QuadratureSpec& spec = {});

// Normalized MSE of an arbitrary encoder/decoder pair over a standard normal
// source by nested adaptive quadrature.
double quadrature_mse(const std::function<double(double)>& decoder_fn,
                      const std::function<double(double)>& encoder_fn,
                      const QuadratureSpec& spec = {});

struct ParetoRecord {
  double pe_target = 0.0;
  double alpha = 0.0;
  double beta_or_delta = 0.0;
  std::optional<double> psi;
  double closed_form_risk = 0.0;
  double mc_mse = 0.0;
  double mc_mse_se = 0.0;
  double mc_risk = 0.0;
  double mc_risk_se = 0.0;
  double power = 0.0;
  bool failed = false;
  std::string failure;
};

// Sweeps design targets across the feasible risk range, designs each point,
// and validates it by Monte Carlo.
std::vector<ParetoRecord> pareto_sweep_binary(const SourceChannelConfig& cfg,
                                              int n_points, std::uint64_t mc_n,
                                              std::uint64_t seed);

std::vector<ParetoRecord> pareto_sweep_ad(const SourceChannelConfig& cfg,
                                          const NormalityModel& model,
                                          int n_points, std::uint64_t mc_n,
                                          std::uint64_t seed,
                                          double epsilon = 0.0,
                                          double m_over_t = 2.0);

}  // namespace jscc

#endif
