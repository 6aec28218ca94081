#pragma once

#include <functional>
#include <vector>

namespace binomoment {

enum class QuadratureMethod { DoubleExponential, GaussLegendreComposite };

struct QuadratureSpec {
  QuadratureMethod method = QuadratureMethod::DoubleExponential;
  /// Absolute tolerance for integrals of magnitude <= 1, relative above.
  double target_abs_tol = 1e-11;
  int max_levels = 9;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool tolerance_met = false;
  long evaluations = 0;
};

/// Integrand on [a, b] that also receives the distances to both ends, which
/// are exact even where x itself rounds onto an endpoint.
using EdgeIntegrand = std::function<double(double x, double gap_a, double gap_b)>;

/// Integral of f over [a, b].
QuadratureResult integrate(const EdgeIntegrand& f, double a, double b, const QuadratureSpec& spec = {});

/// Integrals of x^s f(x) for every s in exponents, sharing one set of f
/// evaluations. Each entry refines until its own tolerance is met.
std::vector<QuadratureResult> integrate_weighted(const EdgeIntegrand& f, double a, double b,
                                                 const std::vector<double>& exponents,
                                                 const QuadratureSpec& spec = {});

}  // namespace binomoment
