#include "jscc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jscc {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelResult {
  double integral;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double x = h * kKronrodNodes[i];
    const double fs = f(c - x) + f(c + x);
    kron += kKronrodWeights[i] * fs;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fs;
  }
  kron *= h;
  gauss *= h;
  return {kron, std::abs(kron - gauss)};
}

}  // namespace

QuadratureNotConverged::QuadratureNotConverged(double err, std::size_t subs)
    : std::runtime_error("quadrature did not converge: error estimate " +
                         std::to_string(err) + " after " +
                         std::to_string(subs) + " subdivisions"),
      error_estimate(err),
      subdivisions(subs) {}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  if (a == b) return 0.0;
  struct Panel {
    double a, b, integral, error;
  };
  PanelResult first = gk15(f, a, b);
  std::vector<Panel> panels{{a, b, first.integral, first.error}};
  double total_error = first.error;
  std::size_t subdivisions = 0;
  while (total_error > spec.abs_tol) {
    if (++subdivisions > spec.max_subdivisions)
      throw QuadratureNotConverged(total_error, subdivisions);
    auto worst = std::max_element(
        panels.begin(), panels.end(),
        [](const Panel& p, const Panel& q) { return p.error < q.error; });
    const Panel p = *worst;
    const double mid = 0.5 * (p.a + p.b);
    if (mid == p.a || mid == p.b)
      throw QuadratureNotConverged(total_error, subdivisions);
    PanelResult left = gk15(f, p.a, mid);
    PanelResult right = gk15(f, mid, p.b);
    *worst = {p.a, mid, left.integral, left.error};
    panels.push_back({mid, p.b, right.integral, right.error});
    total_error += left.error + right.error - p.error;
  }
  // Pairwise-stable summation order: panels sorted by left endpoint.
  std::sort(panels.begin(), panels.end(),
            [](const Panel& p, const Panel& q) { return p.a < q.a; });
  double sum = 0.0;
  for (const Panel& p : panels) sum += p.integral;
  return sum;
}

double integrate(const std::function<double(double)>& f,
                 const std::vector<std::pair<double, double>>& intervals,
                 const QuadratureSpec& spec) {
  double sum = 0.0;
  for (const auto& [a, b] : intervals) sum += integrate(f, a, b, spec);
  return sum;
}

}  // namespace jscc
