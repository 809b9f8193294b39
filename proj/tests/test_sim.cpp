#include <cmath>
#include <doctest.h>

#include "jscc/binary.hpp"
#include "jscc/sim.hpp"
#include "jscc/special.hpp"
#include "oracles.hpp"

using namespace jscc;

TEST_SUITE("sim") {

TEST_CASE("rng basic statistics and reproducibility") {
  Rng a(123456);
  Rng b(123456);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

  Rng rng(99);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.next_uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    sum += u;
    sum2 += u * u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
  CHECK(sum2 / n == doctest::Approx(1.0 / 3.0).epsilon(0.01));

  double nsum = 0.0, nsum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.next_std_normal();
    nsum += z;
    nsum2 += z * z;
  }
  CHECK(nsum / n == doctest::Approx(0.0).epsilon(1.0).scale(0.01));
  CHECK(nsum2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("truncated and tail samplers respect their supports") {
  Rng rng(7);
  const double t = 2.0;
  for (int i = 0; i < 20000; ++i) {
    CHECK(std::fabs(rng.next_truncated_normal(t)) <= t);
    CHECK(std::fabs(rng.next_gaussian_tail(t)) >= t);
    const double u = rng.next_uniform_tail(t, 4.0);
    CHECK(std::fabs(u) >= t);
    CHECK(std::fabs(u) <= 4.0);
  }
}

TEST_CASE("run_chain is byte-identical across runs") {
  const SimConfig cfg{100000, 2024,
                      BinarySystem{PiecewiseLinearEncoder(1.0, 1.0)}};
  const ChainResult r1 = run_chain(cfg);
  const ChainResult r2 = run_chain(cfg);
  CHECK(r1.mse.mean == r2.mse.mean);
  CHECK(r1.error_rate.mean == r2.error_rate.mean);
  CHECK(r1.empirical_power.mean == r2.empirical_power.mean);
  CHECK(r1.mse.std_error == r2.mse.std_error);
}

TEST_CASE("standard errors scale like 1/sqrt(n)") {
  const PiecewiseLinearEncoder enc(1.0, 1.0);
  const ChainResult small = run_chain({100000, 5, BinarySystem{enc}});
  const ChainResult big = run_chain({400000, 5, BinarySystem{enc}});
  const double ratio = small.mse.std_error / big.mse.std_error;
  CHECK(ratio == doctest::Approx(2.0).epsilon(0.10));
}

TEST_CASE("binary chain matches closed forms") {
  const PiecewiseLinearEncoder enc(1.2, 0.9);
  const ChainResult mc = run_chain({1000000, 31337, BinarySystem{enc}});
  CHECK(std::fabs(mc.error_rate.mean - risk_closed_form(enc)) <=
        3.0 * mc.error_rate.std_error);
  CHECK(std::fabs(mc.empirical_power.mean - normalized_power(enc)) <=
        3.0 * mc.empirical_power.std_error);
  // Class balance: risk estimator meaningful only if both classes appear;
  // the error rate at beta >> 0 would be ~0, so use the power column to
  // confirm the sample size.
  CHECK(mc.mse.n == 1000000);
}

TEST_CASE("AD chain class fractions and rates") {
  const NormalityModel model(2.0);
  const ADEncoder enc(1.0, 0.0, 3.0);
  const DetectorConfig det = bayes_threshold(enc, model);

  // epsilon = 0: anomaly fraction 1 - theta; rates match closed forms.
  const ContaminationModel clean(0.0, 4.0);
  const ChainResult mc =
      run_chain({1000000, 555, ADSystem{enc, model, clean, det}});
  CHECK(std::fabs(mc.fpr->mean - fpr(det, enc.alpha, model)) <=
        3.0 * mc.fpr->std_error);
  CHECK(std::fabs(mc.fnr->mean - fnr_sign(det, enc.delta)) <=
        3.0 * mc.fnr->std_error);
  const ADRiskBreakdown rb = risk_ad(det, enc, model, clean);
  CHECK(std::fabs(mc.error_rate.mean - rb.risk) <=
        3.0 * mc.error_rate.std_error);

  // Contaminated run still matches the closed-form mixture risk.
  const ContaminationModel cont(0.1, 4.0);
  const ChainResult mcc =
      run_chain({1000000, 556, ADSystem{enc, model, cont, det}});
  const ADRiskBreakdown rbc = risk_ad(det, enc, model, cont);
  CHECK(std::fabs(mcc.error_rate.mean - rbc.risk) <=
        3.0 * mcc.error_rate.std_error);
}

TEST_CASE("quadrature decoder and MSE oracles") {
  // Linear system: quadrature MSE equals 1/(1+alpha^2) exactly.
  const double alpha = 1.5;
  auto enc_fn = [alpha](double x) { return alpha * x; };
  auto dec_fn = [alpha](double w) {
    return alpha * w / (1.0 + alpha * alpha);
  };
  CHECK(quadrature_mse(dec_fn, enc_fn) ==
        doctest::Approx(1.0 / (1.0 + alpha * alpha)).epsilon(1e-8));

  // Sign system with the tanh decoder: MC agrees with quadrature.
  const double beta = 1.3;
  auto senc = [beta](double x) { return x >= 0.0 ? beta : -beta; };
  auto sdec = [beta](double w) {
    return std::sqrt(2.0 / M_PI) * std::tanh(beta * w);
  };
  const double qmse = quadrature_mse(sdec, senc);
  const ChainResult mc =
      run_chain({1000000, 777, BinarySystem{PiecewiseLinearEncoder(0.0, beta)}});
  CHECK(std::fabs(mc.mse.mean - qmse) <= 3.0 * mc.mse.std_error);
}

TEST_CASE("binary pareto sweep is sorted with nonincreasing MSE") {
  const SourceChannelConfig cfg(2.0, 1.0, 3.0);
  const auto recs = pareto_sweep_binary(cfg, 8, 100000, 11);
  REQUIRE(recs.size() == 8);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CAPTURE(i);
    CHECK_FALSE(recs[i].failed);
    CHECK(std::fabs(recs[i].closed_form_risk - recs[i].pe_target) <= 1e-9);
    if (i > 0) {
      CHECK(recs[i].pe_target > recs[i - 1].pe_target);
      // MC jitter allowance on monotonicity of the distortion column.
      CHECK(recs[i].mc_mse <=
            recs[i - 1].mc_mse + 3.0 * (recs[i].mc_mse_se +
                                        recs[i - 1].mc_mse_se));
    }
  }
}

TEST_CASE("AD pareto sweep designs every interior point") {
  const SourceChannelConfig cfg(2.0, 1.0, 3.0);
  const NormalityModel model(2.0);
  const auto recs = pareto_sweep_ad(cfg, model, 6, 50000, 13, 0.0, 2.0);
  REQUIRE(recs.size() == 6);
  for (const auto& r : recs) {
    CAPTURE(r.pe_target);
    CHECK_FALSE(r.failed);
    CHECK(std::fabs(r.closed_form_risk - r.pe_target) <= 1e-8);
    CHECK(r.power == doctest::Approx(cfg.snr()).epsilon(1e-9));
    CHECK(r.psi.has_value());
  }
}

}  // TEST_SUITE
