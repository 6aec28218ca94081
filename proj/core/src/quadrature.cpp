#include "binomoment/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "binomoment/errors.hpp"
#include "binomoment/parallel.hpp"

namespace binomoment {

namespace {

struct Node {
  double x, gap_a, gap_b, weight;
};

// Tanh-sinh abscissa at t: x = mid + half * tanh(pi/2 sinh t).
Node tanh_sinh_node(double a, double b, double t) {
  const double u = 0.5 * std::numbers::pi * std::sinh(t);
  const double e = std::exp(-2.0 * std::abs(u));
  const double width = b - a;
  const double near = width * e / (1.0 + e);
  const double far = width / (1.0 + e);
  Node n{};
  n.gap_a = t < 0 ? near : far;
  n.gap_b = t < 0 ? far : near;
  n.x = t < 0 ? a + n.gap_a : b - n.gap_b;
  // dx/dt = half * sech^2(u) * (pi/2) cosh t, sech^2(u) = 4e/(1+e)^2.
  n.weight = 0.5 * width * 4.0 * e / ((1.0 + e) * (1.0 + e)) * 0.5 * std::numbers::pi * std::cosh(t);
  return n;
}

constexpr double kTmax = 6.5;
constexpr double kBaseStep = 0.5;

// Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(static_cast<std::size_t>(n));
  weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[static_cast<std::size_t>(i)] = x;
    weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

bool within(double err, double value, double tol) { return err <= tol * std::max(1.0, std::abs(value)); }

}  // namespace

std::vector<QuadratureResult> integrate_weighted(const EdgeIntegrand& f, double a, double b,
                                                 const std::vector<double>& exponents,
                                                 const QuadratureSpec& spec) {
  if (!(b > a)) throw DomainError("integrate: empty interval");
  if (!(spec.target_abs_tol >= 1e-14)) throw DomainError("integrate: tolerance must be at least 1e-14");
  const std::size_t m = exponents.size();
  std::vector<QuadratureResult> results(m);
  std::vector<double> totals(m, 0.0), previous(m, 0.0);
  long evaluations = 0;

  auto accumulate = [&](const std::vector<Node>& nodes) {
    std::vector<double> fx(nodes.size(), 0.0);
    parallel_for(nodes.size(), [&](std::size_t i) {
      const Node& n = nodes[i];
      if (n.weight == 0.0 || n.gap_a <= 0.0 || n.gap_b <= 0.0) return;
      fx[i] = f(n.x, n.gap_a, n.gap_b);
    });
    evaluations += static_cast<long>(nodes.size());
    std::vector<double> terms(nodes.size());
    for (std::size_t e = 0; e < m; ++e) {
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& n = nodes[i];
        terms[i] = fx[i] == 0.0 ? 0.0 : n.weight * fx[i] * (exponents[e] == 0.0 ? 1.0 : std::pow(n.x, exponents[e]));
      }
      totals[e] += pairwise_sum(terms.data(), terms.size());
    }
  };

  if (spec.method == QuadratureMethod::DoubleExponential) {
    double h = kBaseStep;
    for (int level = 0; level <= spec.max_levels; ++level) {
      std::vector<Node> nodes;
      const int count = static_cast<int>(std::floor(kTmax / h));
      for (int j = -count; j <= count; ++j) {
        if (level > 0 && j % 2 == 0) continue;
        nodes.push_back(tanh_sinh_node(a, b, j * h));
      }
      accumulate(nodes);
      bool done = level >= 2;
      for (std::size_t e = 0; e < m; ++e) {
        const double value = totals[e] * h;
        results[e].value = value;
        results[e].error_estimate = level == 0 ? std::abs(value) : std::abs(value - previous[e]);
        results[e].tolerance_met = level >= 2 && within(results[e].error_estimate, value, spec.target_abs_tol);
        done = done && results[e].tolerance_met;
        previous[e] = value;
      }
      if (done) break;
      h *= 0.5;
    }
  } else {
    std::vector<double> gl_x, gl_w;
    gauss_legendre(20, gl_x, gl_w);
    for (int level = 0; level <= spec.max_levels; ++level) {
      const int panels = 1 << level;
      const double width = (b - a) / panels;
      std::vector<Node> nodes;
      for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        for (std::size_t i = 0; i < gl_x.size(); ++i) {
          Node n{};
          n.x = lo + 0.5 * width * (1.0 + gl_x[i]);
          n.gap_a = n.x - a;
          n.gap_b = b - n.x;
          n.weight = 0.5 * width * gl_w[i];
          nodes.push_back(n);
        }
      }
      std::fill(totals.begin(), totals.end(), 0.0);
      accumulate(nodes);
      bool done = level >= 1;
      for (std::size_t e = 0; e < m; ++e) {
        const double value = totals[e];
        results[e].value = value;
        results[e].error_estimate = level == 0 ? std::abs(value) : std::abs(value - previous[e]);
        results[e].tolerance_met = level >= 1 && within(results[e].error_estimate, value, spec.target_abs_tol);
        done = done && results[e].tolerance_met;
        previous[e] = value;
      }
      if (done) break;
    }
  }
  for (auto& r : results) r.evaluations = evaluations;
  return results;
}

QuadratureResult integrate(const EdgeIntegrand& f, double a, double b, const QuadratureSpec& spec) {
  return integrate_weighted(f, a, b, {0.0}, spec).front();
}

}  // namespace binomoment
