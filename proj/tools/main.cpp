// Command-line front end: every number emitted here is produced by a library
// call; the CLI only parses options and serializes records.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jscc/anomaly.hpp"
#include "jscc/binary.hpp"
#include "jscc/sim.hpp"
#include "jscc/special.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// One flat output record: ordered key -> (formatted CSV cell, JSON value).
class Record {
 public:
  void add(const std::string& key, double v) {
    keys_.push_back(key);
    cells_.push_back(fmt17(v));
    json_[key] = v;
  }
  void add(const std::string& key, std::uint64_t v) {
    keys_.push_back(key);
    cells_.push_back(std::to_string(v));
    json_[key] = v;
  }
  void add(const std::string& key, bool v) {
    keys_.push_back(key);
    cells_.push_back(v ? "true" : "false");
    json_[key] = v;
  }
  void add(const std::string& key, const std::string& v) {
    keys_.push_back(key);
    cells_.push_back(v);
    json_[key] = v;
  }
  const std::vector<std::string>& keys() const { return keys_; }
  const std::vector<std::string>& cells() const { return cells_; }
  const ordered_json& json() const { return json_; }

 private:
  std::vector<std::string> keys_;
  std::vector<std::string> cells_;
  ordered_json json_ = ordered_json::object();
};

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const std::vector<Record>& records) {
  std::ostringstream os;
  const auto& keys = records.front().keys();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(keys[i]);
  }
  os << '\n';
  for (const auto& rec : records) {
    const auto& cells = rec.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(cells[i]);
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(const std::vector<Record>& records, bool as_array) {
  if (as_array) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) arr.push_back(rec.json());
    return arr.dump(2) + "\n";
  }
  return records.front().json().dump(2) + "\n";
}

int emit(const std::vector<Record>& records, const std::string& format,
         const std::string& out_path, bool as_array) {
  const std::string text =
      format == "json" ? to_json(records, as_array) : to_csv(records);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output path: " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

struct CommonOpts {
  double sigma_x = 1.0;
  double sigma_z = 1.0;
  double power = 1.0;
  double pe = 0.05;
  double t = 2.0;       // normalized threshold t = T / sigma_x
  double epsilon = 0.0;
  double m = 0.0;       // normalized contamination bound; 0 means 2t
  int points = 20;
  std::uint64_t mc_n = 100000;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
};

void add_source_channel_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--sigma-x", o.sigma_x, "Source standard deviation")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--sigma-z", o.sigma_z, "Channel noise standard deviation")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--power", o.power, "Average transmit power budget")
      ->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Output path (default: stdout)");
}

double m_or_default(const CommonOpts& o) {
  return o.m > 0.0 ? o.m : 2.0 * o.t;
}

void append_class_design(Record& rec, const CommonOpts& o,
                         const jscc::SourceChannelConfig& cfg,
                         const jscc::DesignSolution& sol) {
  const jscc::ParetoRange range = jscc::pareto_range(cfg.snr());
  const jscc::PiecewiseLinearEncoder enc(sol.alpha, sol.beta);
  rec.add("sigma_x", o.sigma_x);
  rec.add("sigma_z", o.sigma_z);
  rec.add("power", o.power);
  rec.add("snr", cfg.snr());
  rec.add("pe_target", o.pe);
  rec.add("alpha", sol.alpha);
  rec.add("beta", sol.beta);
  rec.add("gain_a", sol.alpha * o.sigma_z / o.sigma_x);  // A = alpha sZ/sX
  rec.add("gain_b", sol.beta * o.sigma_z);               // B = beta sZ
  rec.add("achieved_risk", sol.achieved_risk);
  rec.add("solver_residual", sol.solver_residual);
  rec.add("degenerate", sol.degenerate);
  rec.add("normalized_power", jscc::normalized_power(enc));
  rec.add("pe_min", range.pe_min);
  rec.add("pe_max", range.pe_max);
  rec.add("mmse_linear_corner", jscc::mmse_linear(std::sqrt(cfg.snr())));
  rec.add("mmse_tanh_bound_corner",
          jscc::mmse_tanh_bound(std::sqrt(cfg.snr())));
}

void append_ad_design(Record& rec, const CommonOpts& o,
                      const jscc::SourceChannelConfig& cfg,
                      const jscc::NormalityModel& model,
                      const jscc::ADDesign& sol) {
  const jscc::ADEncoder enc(sol.alpha, 0.0, sol.delta);
  const jscc::DetectorConfig det(sol.psi);
  const double theta = model.theta();
  const double power_total = jscc::power_ad(enc, model);
  const double power_inside =
      sol.alpha * sol.alpha *
      (theta - 2.0 * model.t * jscc::std_normal_pdf(model.t));
  rec.add("sigma_x", o.sigma_x);
  rec.add("sigma_z", o.sigma_z);
  rec.add("power", o.power);
  rec.add("snr", cfg.snr());
  rec.add("t", o.t);
  rec.add("theta", theta);
  rec.add("pe_target", o.pe);
  rec.add("alpha", sol.alpha);
  rec.add("delta", sol.delta);
  rec.add("psi", sol.psi);
  rec.add("gain_a", sol.alpha * o.sigma_z / o.sigma_x);
  rec.add("gain_d", sol.delta * o.sigma_z);
  rec.add("psi_denorm", sol.psi * o.sigma_z);
  rec.add("risk_residual", sol.risk_residual);
  rec.add("stationarity_residual", sol.stationarity_residual);
  rec.add("degenerate", sol.degenerate);
  rec.add("n_alpha_roots",
          static_cast<std::uint64_t>(sol.alpha_roots.size()));
  rec.add("normalized_power", power_total);
  rec.add("power_inside", power_inside);
  rec.add("power_outside", power_total - power_inside);

  const jscc::ContaminationModel clean(0.0, m_or_default(o));
  const jscc::ADRiskBreakdown rb = jscc::risk_ad(det, enc, model, clean);
  rec.add("fpr", rb.fpr);
  rec.add("fnr", rb.fnr);
  rec.add("risk", rb.risk);
  if (o.epsilon > 0.0) {
    const jscc::ContaminationModel cont(o.epsilon, m_or_default(o));
    const jscc::ADRiskBreakdown rc = jscc::risk_ad(det, enc, model, cont);
    rec.add("epsilon", o.epsilon);
    rec.add("m", m_or_default(o));
    rec.add("fnr_unknown", rc.fnr_unknown);
    rec.add("risk_contaminated", rc.risk);
    rec.add("risk_contamination_delta", rc.risk - rb.risk);
  }
}

Record pareto_record(const jscc::ParetoRecord& p, bool is_ad) {
  Record rec;
  rec.add("pe_target", p.pe_target);
  rec.add("status", std::string(p.failed ? "failed" : "ok"));
  rec.add("failure", p.failure);
  rec.add("alpha", p.alpha);
  rec.add(is_ad ? "delta" : "beta", p.beta_or_delta);
  if (is_ad) rec.add("psi", p.psi.value_or(0.0));
  rec.add("closed_form_risk", p.closed_form_risk);
  rec.add("mc_mse", p.mc_mse);
  rec.add("mc_mse_se", p.mc_mse_se);
  rec.add("mc_risk", p.mc_risk);
  rec.add("mc_risk_se", p.mc_risk_se);
  rec.add("normalized_power", p.power);
  return rec;
}

void append_chain(Record& rec, const CommonOpts& o,
                  const jscc::ChainResult& mc) {
  rec.add("mc_n", o.mc_n);
  rec.add("seed", o.seed);
  rec.add("mc_mse", mc.mse.mean);
  rec.add("mc_mse_se", mc.mse.std_error);
  rec.add("mc_mse_denorm", mc.mse.mean * o.sigma_x * o.sigma_x);
  rec.add("mc_risk", mc.error_rate.mean);
  rec.add("mc_risk_se", mc.error_rate.std_error);
  rec.add("mc_power", mc.empirical_power.mean);
  rec.add("mc_power_se", mc.empirical_power.std_error);
  if (mc.fpr) {
    rec.add("mc_fpr", mc.fpr->mean);
    rec.add("mc_fpr_se", mc.fpr->std_error);
  }
  if (mc.fnr) {
    rec.add("mc_fnr", mc.fnr->mean);
    rec.add("mc_fnr_se", mc.fnr->std_error);
  }
}

// ---------------------------------------------------------------------------
// validate: cross-oracle checks, printed as a pass/fail table.

struct CheckResult {
  std::string name;
  double deviation;
  double tolerance;
  bool pass() const { return deviation <= tolerance; }
};

void run_special_suite(std::vector<CheckResult>& results) {
  using namespace jscc;
  double d;

  d = 0.0;
  for (double h = -6.0; h <= 6.0; h += 0.125)
    d = std::max(d, std::fabs(owen_t(h, 0.0)));
  results.push_back({"owen_t T(h,0)=0", d, 1e-12});

  d = 0.0;
  for (double a = -5.0; a <= 5.0; a += 0.125)
    d = std::max(d,
                 std::fabs(owen_t(0.0, a) - std::atan(a) / (2.0 * M_PI)));
  results.push_back({"owen_t T(0,a)=atan(a)/2pi", d, 1e-12});

  d = 0.0;
  for (double h = -6.0; h <= 6.0; h += 0.125) {
    const double phi = 1.0 - std_normal_tail(h);
    d = std::max(d, std::fabs(owen_t(h, 1.0) - 0.5 * phi * (1.0 - phi)));
  }
  results.push_back({"owen_t T(h,1) identity", d, 1e-12});

  d = 0.0;
  for (double xi = -6.0; xi <= 6.0; xi += 0.125)
    d = std::max(d, std::fabs(skew_normal_cdf(xi, SkewShape(0.0)) -
                              std_normal_tail(-xi)));
  results.push_back({"skew_normal_cdf lambda=0", d, 1e-12});

  d = 0.0;
  for (double xi = -4.0; xi <= 4.0; xi += 0.5)
    for (double om = -4.0; om <= 4.0; om += 0.5) {
      const double lhs = bvn_cdf(xi, om, Correlation(0.0));
      const double rhs = std_normal_tail(-xi) * std_normal_tail(-om);
      d = std::max(d, std::fabs(lhs - rhs));
    }
  results.push_back({"bvn_cdf rho=0 factorization", d, 1e-10});

  d = 0.0;
  for (double xi = -4.0; xi <= 4.0; xi += 0.5)
    for (double om = -4.0; om <= 4.0; om += 0.5)
      for (double rho : {-0.9, -0.3, 0.4, 0.8}) {
        const double lhs = bvn_cdf(xi, om, Correlation(rho));
        const double rhs = bvn_cdf(om, xi, Correlation(rho));
        d = std::max(d, std::fabs(lhs - rhs));
        const double fx = 1.0 - std_normal_tail(xi);
        const double fy = 1.0 - std_normal_tail(om);
        const double lo = std::max(0.0, fx + fy - 1.0);
        const double hi = std::min(fx, fy);
        d = std::max(d, std::max(lo - lhs, lhs - hi));
      }
  results.push_back({"bvn_cdf symmetry + Frechet", d, 1e-10});
}

void run_class_suite(std::vector<CheckResult>& results, std::uint64_t seed) {
  using namespace jscc;
  double d;

  d = 0.0;
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{
           {1.0, 0.0}, {0.0, 2.0}, {0.9, 1.1}, {2.0, 0.5}}) {
    const PiecewiseLinearEncoder enc(a, b);
    auto enc_fn = [&](double x) { return encode(x, enc); };
    for (double w = -8.0; w <= 8.0; w += 0.5) {
      const double q =
          quadrature_decoder(w, enc_fn, {{-10.0, 0.0}, {0.0, 10.0}});
      d = std::max(d, std::fabs(decode_mmse(w, enc) - q));
    }
  }
  results.push_back({"decode_mmse vs quadrature", d, 1e-6});

  d = 0.0;
  const SourceChannelConfig cfg(1.0, 0.63, 3.0);
  for (double pe : {0.01, 0.05, 0.1}) {
    const DesignSolution sol = design(cfg, DesignTarget(pe));
    d = std::max(d, std::fabs(sol.achieved_risk - pe));
  }
  results.push_back({"design risk round-trip", d, 1e-9});

  const PiecewiseLinearEncoder enc(1.2, 0.8);
  SimConfig sim{200000, seed, BinarySystem{enc}};
  const ChainResult mc = run_chain(sim);
  const double dev = std::fabs(mc.error_rate.mean - risk_closed_form(enc));
  results.push_back(
      {"closed-form risk vs MC (3 SE)", dev, 3.0 * mc.error_rate.std_error});
  const double pdev =
      std::fabs(mc.empirical_power.mean - normalized_power(enc));
  results.push_back({"normalized power vs MC (3 SE)", pdev,
                     3.0 * mc.empirical_power.std_error});
}

void run_ad_suite(std::vector<CheckResult>& results, std::uint64_t seed) {
  using namespace jscc;
  const NormalityModel model(2.0);
  const ContaminationModel clean(0.0, 4.0);
  const ADEncoder enc(1.0, 0.5, 2.0);
  const DetectorConfig det(2.5);

  SimConfig sim{400000, seed,
                ADSystem{enc, model, clean, det}};
  const ChainResult mc = run_chain(sim);
  results.push_back({"fpr closed form vs MC (3 SE)",
                     std::fabs(mc.fpr->mean - fpr(det, enc.alpha, model)),
                     3.0 * mc.fpr->std_error});
  results.push_back({"fnr closed form vs MC (3 SE)",
                     std::fabs(mc.fnr->mean - fnr_tails(det, enc, model)),
                     3.0 * mc.fnr->std_error});

  const ADEncoder enc0(1.0, 0.0, 3.0);
  double d = 0.0;
  const double h = 1e-5;
  for (double psi : {1.0, 2.0, 3.5}) {
    const double fd = (risk_ad(DetectorConfig(psi + h), enc0, model, clean)
                           .risk -
                       risk_ad(DetectorConfig(psi - h), enc0, model, clean)
                           .risk) /
                      (2.0 * h);
    d = std::max(
        d, std::fabs(risk_derivative(DetectorConfig(psi), enc0, model) - fd));
  }
  results.push_back({"risk_derivative vs finite diff", d, 1e-6});

  const DetectorConfig star = bayes_threshold(enc0, model);
  double best_psi = 0.0, best_risk = 1e300;
  for (double psi = 1e-3; psi <= enc0.delta + 10.0; psi += 1e-3) {
    const double r = risk_ad(DetectorConfig(psi), enc0, model, clean).risk;
    if (r < best_risk) {
      best_risk = r;
      best_psi = psi;
    }
  }
  results.push_back(
      {"bayes_threshold vs grid search", std::fabs(star.psi - best_psi),
       2e-3});

  const SourceChannelConfig cfg(2.0, 1.0, 3.0);
  const ADDesign sol = design_ad(cfg, DesignTarget(0.02), model);
  results.push_back({"design_ad risk residual",
                     std::fabs(sol.risk_residual), 1e-8});
  results.push_back({"design_ad stationarity residual",
                     std::fabs(sol.stationarity_residual), 1e-8});
  const ADEncoder denc(sol.alpha, 0.0, sol.delta);
  results.push_back({"design_ad power saturation",
                     std::fabs(power_ad(denc, model) - cfg.snr()), 1e-9});
}

int cmd_validate(const std::string& suite, std::uint64_t seed) {
  std::vector<CheckResult> results;
  if (suite == "special" || suite == "all") run_special_suite(results);
  if (suite == "class" || suite == "all") run_class_suite(results, seed);
  if (suite == "ad" || suite == "all") run_ad_suite(results, seed);

  bool all_pass = true;
  std::printf("%-36s %-14s %-14s %s\n", "check", "max deviation", "tolerance",
              "status");
  for (const auto& r : results) {
    all_pass = all_pass && r.pass();
    std::printf("%-36s %-14.3e %-14.3e %s\n", r.name.c_str(), r.deviation,
                r.tolerance, r.pass() ? "PASS" : "FAIL");
  }
  std::printf("%s\n", all_pass ? "all checks passed" : "FAILURES present");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Zero-delay JSCC design and evaluation for the joint "
      "distortion-classification-power problem over AWGN"};
  app.require_subcommand(1);
  CommonOpts o;

  auto* dc = app.add_subcommand(
      "design-class", "Design a piecewise-linear binary-classification system");
  add_source_channel_flags(dc, o);
  dc->add_option("--pe", o.pe, "Target classification error in (0, 0.5)")
      ->required();
  add_output_flags(dc, o);

  auto* da = app.add_subcommand(
      "design-ad", "Design a sign-only anomaly-detection system");
  add_source_channel_flags(da, o);
  da->add_option("--pe", o.pe, "Target detection risk")->required();
  da->add_option("--t", o.t, "Normalized normality threshold t = T/sigma_x")
      ->check(CLI::PositiveNumber);
  da->add_option("--epsilon", o.epsilon, "Contamination prior in [0, 0.1]");
  da->add_option("--m", o.m, "Normalized contamination support bound (default 2t)");
  add_output_flags(da, o);

  auto* pc = app.add_subcommand(
      "pareto-class", "Sweep the binary-classification distortion/risk front");
  add_source_channel_flags(pc, o);
  pc->add_option("--points", o.points, "Number of sweep points (>= 2)");
  pc->add_option("--mc-n", o.mc_n, "Monte-Carlo samples per point");
  pc->add_option("--seed", o.seed, "Random seed");
  add_output_flags(pc, o);

  auto* pa = app.add_subcommand(
      "pareto-ad", "Sweep the anomaly-detection distortion/risk front");
  add_source_channel_flags(pa, o);
  pa->add_option("--t", o.t, "Normalized normality threshold t = T/sigma_x")
      ->check(CLI::PositiveNumber);
  pa->add_option("--epsilon", o.epsilon, "Contamination prior in [0, 0.1]");
  pa->add_option("--m", o.m, "Normalized contamination support bound (default 2t)");
  pa->add_option("--points", o.points, "Number of sweep points (>= 2)");
  pa->add_option("--mc-n", o.mc_n, "Monte-Carlo samples per point");
  pa->add_option("--seed", o.seed, "Random seed");
  add_output_flags(pa, o);

  auto* sm = app.add_subcommand(
      "simulate",
      "Design at a target risk and validate it by a Monte-Carlo chain "
      "(anomaly-detection scenario when --t is given)");
  add_source_channel_flags(sm, o);
  sm->add_option("--pe", o.pe, "Target risk")->required();
  auto* t_opt =
      sm->add_option("--t", o.t,
                     "Normalized normality threshold (selects the "
                     "anomaly-detection scenario)")
          ->check(CLI::PositiveNumber);
  sm->add_option("--epsilon", o.epsilon, "Contamination prior in [0, 0.1]");
  sm->add_option("--m", o.m, "Normalized contamination support bound (default 2t)");
  sm->add_option("--mc-n", o.mc_n, "Monte-Carlo samples");
  sm->add_option("--seed", o.seed, "Random seed");
  add_output_flags(sm, o);

  std::string suite = "all";
  auto* va = app.add_subcommand(
      "validate", "Run cross-oracle validation suites (closed form vs "
                  "quadrature vs Monte Carlo)");
  va->add_option("suite", suite, "Suite to run")
      ->check(CLI::IsMember({"special", "class", "ad", "all"}));
  va->add_option("--seed", o.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (dc->parsed()) {
      const jscc::SourceChannelConfig cfg(o.sigma_x, o.sigma_z, o.power);
      const jscc::DesignSolution sol =
          jscc::design(cfg, jscc::DesignTarget(o.pe));
      Record rec;
      append_class_design(rec, o, cfg, sol);
      return emit({rec}, o.format, o.out, false);
    }
    if (da->parsed()) {
      const jscc::SourceChannelConfig cfg(o.sigma_x, o.sigma_z, o.power);
      const jscc::NormalityModel model(o.t);
      const jscc::ADDesign sol =
          jscc::design_ad(cfg, jscc::DesignTarget(o.pe), model);
      Record rec;
      append_ad_design(rec, o, cfg, model, sol);
      return emit({rec}, o.format, o.out, false);
    }
    if (pc->parsed() || pa->parsed()) {
      const bool is_ad = pa->parsed();
      const jscc::SourceChannelConfig cfg(o.sigma_x, o.sigma_z, o.power);
      std::vector<jscc::ParetoRecord> sweep;
      if (is_ad) {
        const jscc::NormalityModel model(o.t);
        sweep = jscc::pareto_sweep_ad(cfg, model, o.points, o.mc_n, o.seed,
                                      o.epsilon, m_or_default(o) / o.t);
      } else {
        sweep = jscc::pareto_sweep_binary(cfg, o.points, o.mc_n, o.seed);
      }
      std::vector<Record> records;
      records.reserve(sweep.size());
      bool any_ok = false;
      for (const auto& p : sweep) {
        any_ok = any_ok || !p.failed;
        records.push_back(pareto_record(p, is_ad));
      }
      const int rc = emit(records, o.format, o.out, true);
      if (rc != 0) return rc;
      if (!any_ok) {
        std::cerr << "every sweep point failed\n";
        return 2;
      }
      return 0;
    }
    if (sm->parsed()) {
      const jscc::SourceChannelConfig cfg(o.sigma_x, o.sigma_z, o.power);
      Record rec;
      if (t_opt->count() > 0) {
        const jscc::NormalityModel model(o.t);
        const jscc::ADDesign sol =
            jscc::design_ad(cfg, jscc::DesignTarget(o.pe), model);
        append_ad_design(rec, o, cfg, model, sol);
        const jscc::ContaminationModel cont(o.epsilon, m_or_default(o));
        jscc::SimConfig sim{
            o.mc_n, o.seed,
            jscc::ADSystem{jscc::ADEncoder(sol.alpha, 0.0, sol.delta), model,
                           cont, jscc::DetectorConfig(sol.psi)}};
        append_chain(rec, o, jscc::run_chain(sim));
      } else {
        const jscc::DesignSolution sol =
            jscc::design(cfg, jscc::DesignTarget(o.pe));
        append_class_design(rec, o, cfg, sol);
        jscc::SimConfig sim{
            o.mc_n, o.seed,
            jscc::BinarySystem{
                jscc::PiecewiseLinearEncoder(sol.alpha, sol.beta)}};
        append_chain(rec, o, jscc::run_chain(sim));
      }
      return emit({rec}, o.format, o.out, false);
    }
    if (va->parsed()) return cmd_validate(suite, o.seed);
  } catch (const jscc::PeBelowRangeError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const jscc::TargetUnreachableError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
