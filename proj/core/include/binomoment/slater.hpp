#pragma once

#include <limits>
#include <vector>

#include "binomoment/params.hpp"

namespace binomoment {

/// The gamma-quotient data of binom(mp + r, m) for p = k/l > 1:
/// alpha_j = j/l (j <= l), (r + j - l)/(k - l) (j > l); beta_j = (r + j)/k.
struct GammaQuotientSymbol {
  long k = 0;
  long l = 0;
  std::vector<double> alphas;
  std::vector<double> betas;
  /// alphas reordered so that beta_j <= alphas_tilde_j. Filled only for
  /// -1 < r <= p - 1, empty otherwise.
  std::vector<double> alphas_tilde;
  /// Positions j'_1 < ... < j'_l (1-based) of the values i/l in alphas_tilde.
  std::vector<long> j_prime;
  double scale = 0.0;  // c(p)
};

GammaQuotientSymbol build_symbol(const Params& params);

/// Gamma(A) / (Gamma(sigma) Gamma(B)) with A = (sigma - 1) p + r + 1 and
/// B = (sigma - 1)(p - 1) + r + 1, continued through removable
/// singularities. Throws PoleError where no finite limit exists.
double psi(const Params& params, double sigma);

struct SlaterTerm {
  double c = 0.0;  // c(h); exactly 0 when a denominator gamma has a pole
  std::vector<double> a;
  std::vector<double> b;
  double exponent = 0.0;  // (r + h)/k - 1/l
};

/// Chebyshev interpolant of sqrt(w) V as a function of w = 1 - z on
/// [w_lo, w_hi]; that product is analytic at w = 0.
struct EndpointFit {
  double w_lo = 0.0;
  double w_hi = 0.0;
  std::vector<double> coeffs;
};

struct SlaterExpansion {
  long k = 0;
  long l = 0;
  double p = 0.0;
  double r = 0.0;
  double gamma = 0.0;
  std::vector<SlaterTerm> terms;
  double z_scale = 0.0;       // c(p)^l
  double domain_upper = 0.0;  // c(p)
  EndpointFit endpoint;
};

/// Builds the k-term expansion of V_{p,r}. Throws RegionError for p <= 1.
SlaterExpansion build_slater(const Params& params);

struct VEvaluation {
  double value = 0.0;
  /// w = 1 - z was below the direct-summation range and the value came from
  /// the endpoint interpolant.
  bool endpoint_continued = false;
  bool precision_loss = false;
};

inline constexpr double kNoGap = std::numeric_limits<double>::quiet_NaN();

/// V_{p,r}(x) for 0 < x < c(p). edge_gap, when given, is c(p) - x computed
/// without cancellation.
VEvaluation eval_V_detailed(const SlaterExpansion& expansion, double x, double edge_gap = kNoGap);
double eval_V(const SlaterExpansion& expansion, double x, double edge_gap = kNoGap);

/// Density of the Raney measure mu(p, r) for p > 1, 0 < r <= p:
/// W(x) = c x^(c-1) int_x^{c(p)} V_{p,r-1}(y) y^(-c) dy with c = r/(p-1).
class RaneyDensity {
 public:
  explicit RaneyDensity(const Params& params);
  double operator()(double x, double edge_gap = kNoGap) const;
  double upper() const { return base_.domain_upper; }

 private:
  SlaterExpansion base_;
  double c_ = 0.0;
};

double raney_density_W(const Params& params, double x);

}  // namespace binomoment
