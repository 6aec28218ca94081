#pragma once

#include <span>

namespace binomoment {

struct PfqResult {
  double value = 0.0;
  long terms = 0;
  bool converged = false;
  /// Set when the term cap was hit or the partial sums cancelled heavily.
  bool precision_loss = false;
};

inline constexpr long kPfqMaxTerms = 1'000'000;

/// Generalized hypergeometric series sum_m prod (a_i)_m / prod (b_j)_m z^m / m!
/// for |z| < 1. Stops once three consecutive terms fall below
/// 1e-16 (1 - |z|) |sum|. Throws DomainError when some b_j is a
/// nonpositive integer or |z| >= 1.
PfqResult pfq(std::span<const double> a, std::span<const double> b, double z, long max_terms = kPfqMaxTerms);

}  // namespace binomoment
