#include "binomoment/verify.hpp"

#include <Eigen/Dense>
#include <chrono>
#include <cmath>

#include "binomoment/binomial.hpp"
#include "binomoment/closedform.hpp"
#include "binomoment/errors.hpp"
#include "binomoment/slater.hpp"

namespace binomoment {

namespace {

EdgeIntegrand as_integrand(const MeasureModel& m) {
  return [&m](double x, double gap_lo, double gap_hi) { return m.density(x, gap_lo, gap_hi); };
}

}  // namespace

QuadratureResult integrate_density(const MeasureModel& m, long n, const QuadratureSpec& spec) {
  if (!m.has_density()) return QuadratureResult{0.0, 0.0, true, 0};
  return integrate_weighted(as_integrand(m), m.lower, m.upper, {static_cast<double>(n)}, spec).front();
}

QuadratureResult integrate_density_power(const MeasureModel& m, double s, const QuadratureSpec& spec) {
  if (m.lower < 0.0) throw DomainError("integrate_density_power: support must be nonnegative");
  if (!m.has_density()) return QuadratureResult{0.0, 0.0, true, 0};
  return integrate_weighted(as_integrand(m), m.lower, m.upper, {s}, spec).front();
}

CertifyReport certify_measure(const Params& params, long n_max, double rel_tol, const QuadratureSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const MeasureModel m = measure_model(params);
  CertifyReport report;
  report.p = params.p.str();
  report.r = params.r.str();
  report.model = m.description;
  report.atom = m.atom_at_zero;
  report.rel_tol = rel_tol;

  std::vector<double> exponents;
  for (long n = 0; n <= n_max; ++n) exponents.push_back(static_cast<double>(n));
  std::vector<QuadratureResult> integrals(exponents.size());
  if (m.has_density()) integrals = integrate_weighted(as_integrand(m), m.lower, m.upper, exponents, spec);

  report.passed = true;
  for (long n = 0; n <= n_max; ++n) {
    MomentCheck check;
    check.n = n;
    check.expected = m.moment(n).to_double();
    check.computed = integrals[static_cast<std::size_t>(n)].value + (n == 0 ? m.atom_at_zero : 0.0);
    check.quadrature_error = integrals[static_cast<std::size_t>(n)].error_estimate;
    check.error = std::abs(check.computed - check.expected);
    check.passed = check.error <= rel_tol * std::max(1.0, std::abs(check.expected));
    report.passed = report.passed && check.passed;
    report.moments.push_back(check);
  }
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

double hankel_matrix_min_eig(const std::vector<double>& moments, int d) {
  if (d < 0 || static_cast<std::size_t>(2 * d) >= moments.size()) {
    throw DomainError("hankel_matrix_min_eig: need moments up to index 2d");
  }
  Eigen::MatrixXd h(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) h(i, j) = moments[static_cast<std::size_t>(i + j)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double hankel_matrix_min_eig(const MomentVector& moments, int d) {
  std::vector<double> values;
  values.reserve(moments.size());
  for (const auto& m : moments) values.push_back(m.to_double());
  return hankel_matrix_min_eig(values, d);
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::NegativeDensityPoint: return "NegativeDensityPoint";
    case WitnessKind::NegativeEvenMoment: return "NegativeEvenMoment";
    case WitnessKind::NegativeHankel: return "NegativeHankel";
  }
  return "?";
}

std::optional<Witness> search_negativity_witness(const Params& params) {
  params.require_p_above_one();
  const SlaterExpansion expansion = build_slater(params);
  const double c = expansion.domain_upper;
  for (int j = 1; j <= kWitnessDecades; ++j) {
    const double x = c * std::pow(10.0, -j);
    const double v = eval_V(expansion, x);
    if (v < -kWitnessTolerance) return Witness{WitnessKind::NegativeDensityPoint, x, j, v};
  }

  const Scalar p(params.p);
  const std::vector<Scalar> s = binomial_moments(p, params.r, 2 * kWitnessHankelDepth);
  for (int n = 1; n <= kWitnessHankelDepth; ++n) {
    const Scalar& m = s[static_cast<std::size_t>(2 * n)];
    if (m.sign() < 0) return Witness{WitnessKind::NegativeEvenMoment, 0.0, 2 * n, m.to_double()};
  }

  std::vector<double> normalized;
  double scale = 1.0;
  for (const auto& m : s) {
    normalized.push_back(m.to_double() / scale);
    scale *= c;
  }
  for (int d = 1; d <= kWitnessHankelDepth; ++d) {
    double norm = 0.0;
    for (int i = 0; i <= 2 * d; ++i) norm = std::max(norm, std::abs(normalized[static_cast<std::size_t>(i)]));
    const double lambda = hankel_matrix_min_eig(normalized, d);
    if (lambda < -kWitnessTolerance * norm) return Witness{WitnessKind::NegativeHankel, 0.0, d, lambda};
  }
  return std::nullopt;
}

Witness find_negativity_witness(const Params& params) {
  if (auto w = search_negativity_witness(params)) return *w;
  throw InconclusiveError("no negativity witness within the search budget for (" + params.p.str() + ", " +
                          params.r.str() + ")");
}

}  // namespace binomoment
