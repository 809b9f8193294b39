#ifndef JSCC_QUADRATURE_HPP
#define JSCC_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jscc {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  std::size_t max_subdivisions = 2000;
};

class QuadratureNotConverged : public std::runtime_error {
 public:
  QuadratureNotConverged(double error_estimate, std::size_t subdivisions);
  double error_estimate;
  std::size_t subdivisions;
};

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

// Integration over a union of disjoint intervals.
double integrate(const std::function<double(double)>& f,
                 const std::vector<std::pair<double, double>>& intervals,
                 const QuadratureSpec& spec = {});

}  // namespace jscc

#endif
