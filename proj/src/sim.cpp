#include "jscc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

#include "jscc/special.hpp"

namespace jscc {

namespace {

constexpr double kTwoPi = 6.2831853071795864769252867665590058;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

// Fixed chunk layout: results are independent of how chunks are scheduled.
constexpr int kChunks = 64;

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  std::uint64_t state = seed;
  splitmix64(state);
  state ^= 0x632be59bd9b4e019ULL * (chunk + 1);
  return splitmix64(state);
}

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t n = 0;
  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++n;
  }
  void merge(const Accumulator& other) {
    sum += other.sum;
    sum_sq += other.sum_sq;
    n += other.n;
  }
  SimEstimate mean_estimate() const {
    SimEstimate e;
    e.n = n;
    if (n == 0) return e;
    e.mean = sum / static_cast<double>(n);
    const double var =
        std::max(0.0, sum_sq / static_cast<double>(n) - e.mean * e.mean);
    e.std_error = std::sqrt(var / static_cast<double>(n));
    return e;
  }
  SimEstimate rate_estimate() const {
    SimEstimate e;
    e.n = n;
    if (n == 0) return e;
    e.mean = sum / static_cast<double>(n);
    e.std_error =
        std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(n));
    return e;
  }
};

struct ChunkTotals {
  Accumulator mse, error, power, fp, fn;
};

ChunkTotals run_binary_chunk(const BinarySystem& sys, std::uint64_t n,
                             std::uint64_t seed) {
  Rng rng(seed);
  ChunkTotals acc;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = rng.next_std_normal();
    const int cls = x > 0.0 ? 1 : 0;
    const double y = encode(x, sys.encoder);
    const double w = y + rng.next_std_normal();
    const double xhat = decode_mmse(w, sys.encoder);
    acc.mse.add((x - xhat) * (x - xhat));
    acc.error.add(classify(w) != cls ? 1.0 : 0.0);
    acc.power.add(y * y);
  }
  return acc;
}

ChunkTotals run_ad_chunk(const ADSystem& sys, std::uint64_t n,
                         std::uint64_t seed) {
  Rng rng(seed);
  ChunkTotals acc;
  const double t = sys.model.t;
  const double pi_ok = sys.contamination.pi_ok(sys.model);
  const double tau = sys.contamination.tau(sys.model);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double u = rng.next_uniform();
    double x;
    int cls;
    if (u < pi_ok) {
      x = rng.next_truncated_normal(t);
      cls = 0;
    } else if (rng.next_uniform() < tau) {
      x = rng.next_uniform_tail(t, sys.contamination.m);
      cls = 1;
    } else {
      x = rng.next_gaussian_tail(t);
      cls = 1;
    }
    const double y = encode_ad(x, sys.encoder, sys.model);
    const double w = y + rng.next_std_normal();
    const int decision = detect(w, sys.detector);
    acc.error.add(decision != cls ? 1.0 : 0.0);
    acc.power.add(y * y);
    if (cls == 0) {
      const double xhat = decode_ok(w, sys.encoder.alpha, sys.model);
      acc.mse.add((x - xhat) * (x - xhat));
      acc.fp.add(decision == 1 ? 1.0 : 0.0);
    } else {
      acc.fn.add(decision == 0 ? 1.0 : 0.0);
    }
  }
  return acc;
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& s : s_) s = splitmix64(state);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::next_uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::next_std_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  has_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

double Rng::next_truncated_normal(double t) {
  const double q = std_normal_tail(t);
  const double p = q + next_uniform() * (1.0 - 2.0 * q);
  return inverse_std_normal_cdf(p);
}

double Rng::next_gaussian_tail(double t) {
  const double q = std_normal_tail(t);
  const double magnitude = -inverse_std_normal_cdf(next_uniform() * q);
  return next_uniform() < 0.5 ? -magnitude : magnitude;
}

double Rng::next_uniform_tail(double t, double m) {
  const double magnitude = t + next_uniform() * (m - t);
  return next_uniform() < 0.5 ? -magnitude : magnitude;
}

ChainResult run_chain(const SimConfig& config) {
  if (config.n < 1) throw std::invalid_argument("sample count must be >= 1");
  // Chunk sizes and sub-seeds are fixed by (n, seed) alone.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> plan;  // (count, seed)
  const std::uint64_t base = config.n / kChunks;
  const std::uint64_t rem = config.n % kChunks;
  for (int c = 0; c < kChunks; ++c) {
    const std::uint64_t count = base + (static_cast<std::uint64_t>(c) < rem);
    if (count > 0) plan.emplace_back(count, chunk_seed(config.seed, c));
  }
  std::vector<std::future<ChunkTotals>> futures;
  futures.reserve(plan.size());
  for (const auto& [count, seed] : plan) {
    futures.push_back(std::async(std::launch::async, [&, count = count,
                                                      seed = seed] {
      if (const auto* bin = std::get_if<BinarySystem>(&config.system))
        return run_binary_chunk(*bin, count, seed);
      return run_ad_chunk(std::get<ADSystem>(config.system), count, seed);
    }));
  }
  ChunkTotals total;
  for (auto& f : futures) {
    const ChunkTotals part = f.get();  // reduction in fixed chunk order
    total.mse.merge(part.mse);
    total.error.merge(part.error);
    total.power.merge(part.power);
    total.fp.merge(part.fp);
    total.fn.merge(part.fn);
  }
  ChainResult out;
  out.mse = total.mse.mean_estimate();
  out.error_rate = total.error.rate_estimate();
  out.empirical_power = total.power.mean_estimate();
  if (config.scenario() == Scenario::anomaly_detection) {
    out.fpr = total.fp.rate_estimate();
    out.fnr = total.fn.rate_estimate();
  }
  return out;
}

double quadrature_decoder(double w_tilde,
                          const std::function<double(double)>& encoder_fn,
                          const std::vector<std::pair<double, double>>& support,
                          const QuadratureSpec& spec) {
  auto weight = [&](double t) {
    return std_normal_pdf(encoder_fn(t) - w_tilde) * std_normal_pdf(t);
  };
  const double num = integrate(
      [&](double t) { return t * weight(t); }, support, spec);
  const double den = integrate(weight, support, spec);
  return num / den;
}

double quadrature_mse(const std::function<double(double)>& decoder_fn,
                      const std::function<double(double)>& encoder_fn,
                      const QuadratureSpec& spec) {
  // E[(x - h(g(x) + z))^2]; phi mass outside +-10 is below 1e-21.
  constexpr double kLim = 10.0;
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 0.1;
  auto conditional = [&](double t) {
    const double y = encoder_fn(t);
    return integrate(
        [&](double nu) {
          const double err = t - decoder_fn(y + nu);
          return err * err * std_normal_pdf(nu);
        },
        -kLim, kLim, inner);
  };
  return integrate(
      [&](double t) { return conditional(t) * std_normal_pdf(t); }, -kLim,
      kLim, spec);
}

std::vector<ParetoRecord> pareto_sweep_binary(const SourceChannelConfig& cfg,
                                              int n_points, std::uint64_t mc_n,
                                              std::uint64_t seed) {
  if (n_points < 2) throw std::invalid_argument("n_points must be >= 2");
  const ParetoRange range = pareto_range(cfg.snr());
  std::vector<ParetoRecord> records;
  records.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double frac = static_cast<double>(i) / (n_points - 1);
    ParetoRecord rec;
    rec.pe_target = range.pe_min + frac * (range.pe_max - range.pe_min);
    try {
      const DesignSolution sol = design(cfg, DesignTarget(rec.pe_target));
      rec.alpha = sol.alpha;
      rec.beta_or_delta = sol.beta;
      rec.closed_form_risk = sol.achieved_risk;
      const PiecewiseLinearEncoder enc(sol.alpha, sol.beta);
      rec.power = normalized_power(enc);
      SimConfig sim{mc_n, chunk_seed(seed, 1000 + i), BinarySystem{enc}};
      const ChainResult mc = run_chain(sim);
      rec.mc_mse = mc.mse.mean;
      rec.mc_mse_se = mc.mse.std_error;
      rec.mc_risk = mc.error_rate.mean;
      rec.mc_risk_se = mc.error_rate.std_error;
    } catch (const std::exception& e) {
      rec.failed = true;
      rec.failure = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ParetoRecord> pareto_sweep_ad(const SourceChannelConfig& cfg,
                                          const NormalityModel& model,
                                          int n_points, std::uint64_t mc_n,
                                          std::uint64_t seed, double epsilon,
                                          double m_over_t) {
  if (n_points < 2) throw std::invalid_argument("n_points must be >= 2");
  const RiskInterval range = achievable_risk_ad(cfg, model);
  // Pull targets slightly inside the numerically determined range so the
  // boundary points do not fall on the infeasible side of the root bracket.
  const double inset = 1e-3 * (range.hi - range.lo);
  const double risk_lo = range.lo + inset;
  const double risk_hi = range.hi - inset;

  const ContaminationModel contamination(epsilon, m_over_t * model.t);
  std::vector<ParetoRecord> records;
  records.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double frac = static_cast<double>(i) / (n_points - 1);
    ParetoRecord rec;
    rec.pe_target = risk_lo + frac * (risk_hi - risk_lo);
    try {
      const ADDesign sol =
          design_ad(cfg, DesignTarget(rec.pe_target), model);
      rec.alpha = sol.alpha;
      rec.beta_or_delta = sol.delta;
      rec.psi = sol.psi;
      rec.closed_form_risk = rec.pe_target + sol.risk_residual;
      const ADEncoder enc(sol.alpha, 0.0, sol.delta);
      rec.power = power_ad(enc, model);
      SimConfig sim{mc_n, chunk_seed(seed, 2000 + i),
                    ADSystem{enc, model, contamination,
                             DetectorConfig(sol.psi)}};
      const ChainResult mc = run_chain(sim);
      rec.mc_mse = mc.mse.mean;
      rec.mc_mse_se = mc.mse.std_error;
      rec.mc_risk = mc.error_rate.mean;
      rec.mc_risk_se = mc.error_rate.std_error;
    } catch (const std::exception& e) {
      rec.failed = true;
      rec.failure = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace jscc
