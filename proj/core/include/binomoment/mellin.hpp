#pragma once

#include <cstdint>
#include <vector>

#include "binomoment/params.hpp"

namespace binomoment {

/// b(u + v, u, l): density (l / B(u, v)) x^(lu - 1) (1 - x^l)^(v - 1) on
/// [0, 1]. v = 0 is the point mass at 1.
struct BetaFactor {
  double u = 1.0;
  double v = 0.0;
  long l = 1;

  bool is_point_mass() const { return v == 0.0; }
};

/// nu(p, r) = b_1 o ... o b_k o delta_{c(p)} (Mellin products).
struct MellinFactorization {
  std::vector<BetaFactor> factors;
  double dilation = 1.0;
};

/// Gamma(u + n/l) Gamma(u + v) / (Gamma(u + v + n/l) Gamma(u)); 1 for v = 0.
double beta_moment(const BetaFactor& f, long n);

/// Factor j is b(alpha~_j, beta_j, l): u = beta_j, v = alpha~_j - beta_j.
/// Requires p > 1 and -1 < r <= p - 1; throws RegionError otherwise.
MellinFactorization factorize(const Params& params);

/// prod_j beta_moment(f_j, n) * dilation^n.
double mellin_product_moments(const MellinFactorization& f, long n);

/// count independent draws of dilation * prod_j Y_j with Y_j ~ factor j.
/// Draws are produced in fixed blocks, each seeded from (seed, block index),
/// so the output does not depend on the number of worker threads.
std::vector<double> sample(const MellinFactorization& f, std::size_t count, std::uint64_t seed);

}  // namespace binomoment
