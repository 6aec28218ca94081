#include "binomoment/hypergeometric.hpp"

#include <algorithm>
#include <cmath>

#include "binomoment/errors.hpp"

namespace binomoment {

PfqResult pfq(std::span<const double> a, std::span<const double> b, double z, long max_terms) {
  for (double bj : b) {
    if (bj <= 0.0 && bj == std::nearbyint(bj)) throw DomainError("pfq: b parameter is a nonpositive integer");
  }
  if (!(std::abs(z) < 1.0)) throw DomainError("pfq: |z| must be below 1");

  PfqResult out;
  if (z == 0.0) {
    out.value = 1.0;
    out.terms = 1;
    out.converged = true;
    return out;
  }

  const double threshold = 1e-16 * (1.0 - std::abs(z));
  double sum = 1.0, term = 1.0, compensation = 0.0, largest = 1.0;
  int quiet = 0;
  long m = 0;
  for (; m < max_terms; ++m) {
    double ratio = z / static_cast<double>(m + 1);
    for (double ai : a) ratio *= ai + static_cast<double>(m);
    for (double bj : b) ratio /= bj + static_cast<double>(m);
    term *= ratio;
    if (term == 0.0) {
      // A numerator parameter hit a nonpositive integer: the series terminates.
      out.converged = true;
      break;
    }
    // Neumaier summation.
    const double t = sum + term;
    compensation += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    largest = std::max(largest, std::abs(term));
    if (std::abs(term) <= threshold * std::abs(sum + compensation)) {
      if (++quiet == 3) {
        out.converged = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  out.value = sum + compensation;
  out.terms = m + 1;
  if (!out.converged) out.precision_loss = true;
  if (largest > 1e8 * std::abs(out.value)) out.precision_loss = true;
  return out;
}

}  // namespace binomoment
