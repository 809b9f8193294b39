// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jscc/anomaly.hpp"
#include "jscc/binary.hpp"
#include "jscc/sim.hpp"
#include "jscc/special.hpp"
#include "oracles.hpp"

using namespace jscc;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("[%2d] %-38s %s  %s\n", idx, name, pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// --- 1. Table reproduction -------------------------------------------------
void criterion_table() {
  const SourceChannelConfig cfg(1.0, 0.63, 3.0);
  const double targets[] = {0.1, 0.058, 0.038, 0.013, 0.0071};
  const double expected[] = {0.12, 0.13, 0.15, 0.22, 0.28};
  double worst = 0.0;
  bool pass = true;
  for (int i = 0; i < 5; ++i) {
    const DesignSolution sol = design(cfg, DesignTarget(targets[i]));
    const SimConfig sim{1000000, 20240813,
                        BinarySystem{PiecewiseLinearEncoder(sol.alpha,
                                                            sol.beta)}};
    const double mse = run_chain(sim).mse.mean;
    const double dev = std::fabs(mse - expected[i]);
    worst = std::max(worst, dev);
    pass = pass && dev <= 0.01;
  }
  report(1, "table reproduction (5 design points)", pass,
         "max |MC MSE - table| = " + fmt(worst) + " (tol 0.01)");
}

// --- 2. Corner formulas vs MC ----------------------------------------------
void criterion_corners() {
  bool pass = true;
  double worst_ratio = 0.0;
  const double snrs[] = {1.0, 2.0, 3.0, 7.5586, 12.0};
  for (int i = 0; i < 5; ++i) {
    const double snr = snrs[i];
    const double root = std::sqrt(snr);
    // Pure reconstruction: MSE = 1/(1+SNR).
    const ChainResult lin = run_chain(
        {1000000, 100 + static_cast<std::uint64_t>(i),
         BinarySystem{PiecewiseLinearEncoder(root, 0.0)}});
    const double mse_dev = std::fabs(lin.mse.mean - 1.0 / (1.0 + snr));
    pass = pass && mse_dev <= 3.0 * lin.mse.std_error;
    worst_ratio = std::max(worst_ratio, mse_dev / (3.0 * lin.mse.std_error));
    // Risk at (alpha, 0) = arccot(alpha)/pi.
    const double risk_dev =
        std::fabs(lin.error_rate.mean - std::atan(1.0 / root) / M_PI);
    pass = pass && risk_dev <= 3.0 * lin.error_rate.std_error;
    worst_ratio =
        std::max(worst_ratio, risk_dev / (3.0 * lin.error_rate.std_error));
    // Risk at (0, beta) = Q(beta).
    const ChainResult sgn = run_chain(
        {1000000, 200 + static_cast<std::uint64_t>(i),
         BinarySystem{PiecewiseLinearEncoder(0.0, root)}});
    const double sgn_dev =
        std::fabs(sgn.error_rate.mean - std_normal_tail(root));
    pass = pass && sgn_dev <= 3.0 * sgn.error_rate.std_error;
    worst_ratio =
        std::max(worst_ratio, sgn_dev / (3.0 * sgn.error_rate.std_error));
  }
  report(2, "corner formulas vs MC (5 SNRs)", pass,
         "worst deviation / (3 SE) = " + fmt(worst_ratio));
}

// --- 3. Bound direction and tightness --------------------------------------
void criterion_bound() {
  bool pass = true;
  double worst_gap = 0.0, worst_tight = 0.0;
  const double betas[] = {0.5, 1.0, std::sqrt(3.0), 2.5};
  for (int i = 0; i < 4; ++i) {
    const double b = betas[i];
    const double bound = mmse_tanh_bound(b);
    // Optimal tanh decoder MC MSE must not exceed the bound.
    const ChainResult mc = run_chain(
        {1000000, 300 + static_cast<std::uint64_t>(i),
         BinarySystem{PiecewiseLinearEncoder(0.0, b)}});
    const double excess = mc.mse.mean - bound;
    pass = pass && excess <= 3.0 * mc.mse.std_error;
    worst_gap = std::max(worst_gap, excess);
    // Quadrature MSE of the erf-surrogate decoder equals the bound.
    auto enc_fn = [b](double x) { return x >= 0.0 ? b : -b; };
    auto dec_fn = [b](double w) {
      return std::sqrt(2.0 / M_PI) * std::erf(b * w * std::sqrt(M_PI) / 2.0);
    };
    const double qmse = quadrature_mse(dec_fn, enc_fn);
    const double tight = std::fabs(qmse - bound);
    pass = pass && tight <= 1e-5;
    worst_tight = std::max(worst_tight, tight);
  }
  report(3, "tanh-bound direction and tightness", pass,
         "max surrogate gap = " + fmt(worst_tight) +
             " (tol 1e-5); max MC excess = " + fmt(worst_gap));
}

// --- 4. Decoder oracle equivalence ------------------------------------------
void criterion_decoders() {
  double worst = 0.0;
  const std::pair<double, double> pts[] = {
      {1.0, 0.0}, {0.0, 2.0}, {0.9, 1.1}, {2.0, 0.5}};
  for (const auto& [a, b] : pts) {
    const PiecewiseLinearEncoder enc(a, b);
    auto enc_fn = [&](double x) { return encode(x, enc); };
    for (double w = -8.0; w <= 8.0; w += 0.25) {
      const double q =
          quadrature_decoder(w, enc_fn, {{-12.0, 0.0}, {0.0, 12.0}});
      worst = std::max(worst, std::fabs(decode_mmse(w, enc) - q));
    }
  }
  const NormalityModel model(2.0);
  for (double alpha : {0.5, 1.6, 3.0}) {
    auto enc_fn = [alpha](double x) { return alpha * x; };
    for (double w = -8.0; w <= 8.0; w += 0.25) {
      const double q =
          quadrature_decoder(w, enc_fn, {{-model.t, model.t}});
      worst = std::max(worst, std::fabs(decode_ok(w, alpha, model) - q));
    }
  }
  report(4, "decoder vs quadrature oracle (7 points)", worst <= 1e-6,
         "max grid deviation = " + fmt(worst) + " (tol 1e-6)");
}

// --- 5. Design-equation properties ------------------------------------------
void criterion_design() {
  bool pass = true;
  for (double snr : {1.0, 3.0, 7.558578987150415, 12.0}) {
    const double a_max = std::sqrt(snr);
    double prev = design_equation_lhs(a_max * 1e-6, snr);
    for (int i = 1; i <= 200; ++i) {
      const double a = a_max * (1e-6 + (1.0 - 2e-6) * i / 200.0);
      const double cur = design_equation_lhs(a, snr);
      pass = pass && cur > prev;
      prev = cur;
    }
  }
  double worst_rt = 0.0;
  const SourceChannelConfig cfg(1.0, 0.63, 3.0);
  const ParetoRange range = pareto_range(cfg.snr());
  for (double frac : {0.1, 0.5, 0.9}) {
    const double pe = range.pe_min + frac * (range.pe_max - range.pe_min);
    const DesignSolution sol = design(cfg, DesignTarget(pe));
    worst_rt = std::max(worst_rt, std::fabs(sol.achieved_risk - pe));
  }
  pass = pass && worst_rt <= 1e-9;
  const SourceChannelConfig c2(2.0, 1.0, 3.0);
  const DesignSolution lo = design(c2, DesignTarget(pareto_range(3.0).pe_min));
  const DesignSolution hi = design(c2, DesignTarget(pareto_range(3.0).pe_max));
  const double corner = std::max(
      std::max(std::fabs(lo.alpha), std::fabs(lo.beta - std::sqrt(3.0))),
      std::max(std::fabs(hi.alpha - std::sqrt(3.0)), std::fabs(hi.beta)));
  pass = pass && corner <= 1e-6;
  report(5, "design equation: monotone + round-trip", pass,
         "round-trip = " + fmt(worst_rt) + " (tol 1e-9); corners = " +
             fmt(corner) + " (tol 1e-6)");
}

// --- 6. Special-function identity suite -------------------------------------
void criterion_special() {
  double worst_t = 0.0, worst_bvn = 0.0;
  for (double h = -6.0; h <= 6.0; h += 0.03125) {
    worst_t = std::max(worst_t, std::fabs(owen_t(h, 0.0)));
    const double phi_h = 1.0 - std_normal_tail(h);
    worst_t = std::max(
        worst_t, std::fabs(owen_t(h, 1.0) - 0.5 * phi_h * (1.0 - phi_h)));
    worst_t = std::max(worst_t, std::fabs(skew_normal_cdf(h, SkewShape(0.0)) -
                                          std_normal_tail(-h)));
  }
  for (double a = -8.0; a <= 8.0; a += 0.03125)
    worst_t = std::max(
        worst_t, std::fabs(owen_t(0.0, a) - std::atan(a) / (2.0 * M_PI)));
  for (double x = -4.0; x <= 4.0; x += 0.25)
    for (double y = -4.0; y <= 4.0; y += 0.25) {
      const double fx = 1.0 - std_normal_tail(x);
      const double fy = 1.0 - std_normal_tail(y);
      worst_bvn = std::max(
          worst_bvn, std::fabs(bvn_cdf(x, y, Correlation(0.0)) - fx * fy));
      for (double rho : {-0.9, 0.5}) {
        const double v = bvn_cdf(x, y, Correlation(rho));
        worst_bvn =
            std::max(worst_bvn, std::fabs(v - bvn_cdf(y, x, Correlation(rho))));
        worst_bvn = std::max(worst_bvn, std::max(0.0, fx + fy - 1.0) - v);
        worst_bvn = std::max(worst_bvn, v - std::min(fx, fy));
      }
    }
  report(6, "special-function identity suite",
         worst_t <= 1e-12 && worst_bvn <= 1e-10,
         "scalar = " + fmt(worst_t) + " (tol 1e-12); bivariate = " +
             fmt(worst_bvn) + " (tol 1e-10)");
}

// --- 7. AD risk formulas vs MC ----------------------------------------------
void criterion_ad_rates() {
  const NormalityModel model(2.0);
  Rng rng(424242);
  bool pass = true;
  double worst_ratio = 0.0;
  auto track = [&](double dev, double se) {
    pass = pass && dev <= 3.0 * se;
    if (se > 0.0) worst_ratio = std::max(worst_ratio, dev / (3.0 * se));
  };
  for (int i = 0; i < 10; ++i) {
    const double alpha = 0.3 + 1.5 * rng.next_uniform();
    const double beta = i % 3 == 0 ? 0.0 : rng.next_uniform();
    const double delta = 2.0 + 3.0 * rng.next_uniform();
    const double psi = 1.0 + 0.8 * delta * rng.next_uniform();
    const ADEncoder enc(alpha, beta, delta);
    const DetectorConfig det(psi);
    // epsilon > 0 exercises FNR^unif through the mixture; epsilon = 0 the
    // pure tails law.
    const double epsilon = i % 2 == 0 ? 0.0 : 0.1;
    const ContaminationModel cont(epsilon, 2.0 * model.t);
    const ChainResult mc = run_chain(
        {1000000, 14000 + static_cast<std::uint64_t>(i),
         ADSystem{enc, model, cont, det}});
    const ADRiskBreakdown rb = risk_ad(det, enc, model, cont);
    track(std::fabs(mc.fpr->mean - rb.fpr), mc.fpr->std_error);
    track(std::fabs(mc.fnr->mean - rb.fnr), mc.fnr->std_error);
    track(std::fabs(mc.error_rate.mean - rb.risk), mc.error_rate.std_error);
    // Mixture identity, exact in closed form.
    pass = pass &&
           rb.fnr == (1.0 - cont.tau(model)) * rb.fnr_tails +
                         cont.tau(model) * rb.fnr_unknown &&
           rb.risk == cont.pi_ok(model) * rb.fpr + cont.pi_ko(model) * rb.fnr;
  }
  report(7, "AD rate formulas vs MC (10 points)", pass,
         "worst deviation / (3 SE) = " + fmt(worst_ratio));
}

// --- 8. Stationarity and threshold -------------------------------------------
void criterion_stationarity() {
  const NormalityModel model(2.0);
  const ContaminationModel clean(0.0, 4.0);
  bool pass = true;
  double worst_fd = 0.0;
  const double h = 1e-5;
  for (double beta : {0.0, 0.4}) {
    const ADEncoder enc(1.0, beta, 3.0);
    for (double psi : {1.0, 2.5, 4.0}) {
      const double fd =
          (risk_ad(DetectorConfig(psi + h), enc, model, clean).risk -
           risk_ad(DetectorConfig(psi - h), enc, model, clean).risk) /
          (2.0 * h);
      worst_fd = std::max(
          worst_fd,
          std::fabs(risk_derivative(DetectorConfig(psi), enc, model) - fd));
    }
  }
  pass = pass && worst_fd <= 1e-6;

  const ADEncoder enc0(1.0, 0.0, 3.0);
  const DetectorConfig star = bayes_threshold(enc0, model);
  double best_psi = 0.0, best = 1e300;
  for (double psi = 1e-3; psi <= enc0.delta + 10.0; psi += 1e-3) {
    const double r = risk_ad(DetectorConfig(psi), enc0, model, clean).risk;
    if (r < best) {
      best = r;
      best_psi = psi;
    }
  }
  const double grid_dev = std::fabs(star.psi - best_psi);
  pass = pass && grid_dev <= 2e-3;

  double worst_res = 0.0, worst_pow = 0.0;
  const SourceChannelConfig cfg(2.0, 1.0, 3.0);
  for (double pe : {0.01, 0.02, 0.04}) {
    const ADDesign sol = design_ad(cfg, DesignTarget(pe), model);
    worst_res = std::max(worst_res, std::fabs(sol.risk_residual));
    worst_res = std::max(worst_res, std::fabs(sol.stationarity_residual));
    worst_pow = std::max(
        worst_pow,
        std::fabs(power_ad(ADEncoder(sol.alpha, 0.0, sol.delta), model) -
                  cfg.snr()));
  }
  pass = pass && worst_res <= 1e-8 && worst_pow <= 1e-9;
  report(8, "stationarity, threshold, design system", pass,
         "fin-diff = " + fmt(worst_fd) + "; grid = " + fmt(grid_dev) +
             "; residuals = " + fmt(worst_res) + "; power = " +
             fmt(worst_pow));
}

// --- 9. Contamination robustness ---------------------------------------------
void criterion_contamination() {
  const NormalityModel model(2.0);
  bool pass = true;
  double worst = 0.0;
  int designed = 0;
  for (double sigma_z : {0.5, 1.0}) {
    const SourceChannelConfig cfg(2.0, sigma_z, 3.0);
    const auto recs =
        pareto_sweep_ad(cfg, model, 8, 1000000, 90210, 1e-3, 2.0);
    for (const auto& r : recs) {
      if (r.failed) continue;
      ++designed;
      const double dev = std::fabs(r.mc_risk - r.closed_form_risk);
      worst = std::max(worst, dev);
      pass = pass && dev <= 0.005;
    }
  }
  pass = pass && designed >= 12;
  report(9, "contamination robustness (eps = 1e-3)", pass,
         "max |MC risk - eps0 closed form| = " + fmt(worst) +
             " (tol 0.005) over " + std::to_string(designed) + " designs");
}

// --- 10. CLI determinism -------------------------------------------------------
std::string slurp(const char* path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void criterion_determinism() {
#ifndef JSCC_CLI_PATH
  report(10, "CLI determinism", false, "CLI path not configured");
#else
  const std::string cli = JSCC_CLI_PATH;
  const std::string base = " pareto-class --sigma-x 2 --sigma-z 1 --power 3 "
                           "--points 4 --mc-n 50000 --seed 77 --out ";
  bool pass = true;
  std::string detail;
  const int rc1 = std::system((cli + base + "/tmp/jscc_det_a.csv").c_str());
  const int rc2 = std::system((cli + base + "/tmp/jscc_det_b.csv").c_str());
  pass = rc1 == 0 && rc2 == 0;
  const std::string a = slurp("/tmp/jscc_det_a.csv");
  const std::string b = slurp("/tmp/jscc_det_b.csv");
  pass = pass && !a.empty() && a == b;
  const std::string sim = " simulate --sigma-x 1 --sigma-z 0.63 --power 3 "
                          "--pe 0.038 --mc-n 200000 --seed 5 --format json "
                          "--out ";
  const int rc3 = std::system((cli + sim + "/tmp/jscc_det_c.json").c_str());
  const int rc4 = std::system((cli + sim + "/tmp/jscc_det_d.json").c_str());
  pass = pass && rc3 == 0 && rc4 == 0 &&
         slurp("/tmp/jscc_det_c.json") == slurp("/tmp/jscc_det_d.json") &&
         !slurp("/tmp/jscc_det_c.json").empty();
  report(10, "CLI determinism (fixed seed, 2 runs)", pass,
         pass ? "byte-identical outputs" : "outputs differ or command failed");
#endif
}

}  // namespace

int main() {
  criterion_table();
  criterion_corners();
  criterion_bound();
  criterion_decoders();
  criterion_design();
  criterion_special();
  criterion_ad_rates();
  criterion_stationarity();
  criterion_contamination();
  criterion_determinism();
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 10 acceptance criteria passed\n");
  return 0;
}
