#include "binomoment/mellin.hpp"

#include <cmath>

#include "binomoment/binomial.hpp"
#include "binomoment/errors.hpp"
#include "binomoment/gamma.hpp"

namespace binomoment {

double beta_moment(const BetaFactor& f, long n) {
  if (f.is_point_mass() || n == 0) return 1.0;
  const double s = static_cast<double>(n) / static_cast<double>(f.l);
  const double log_value =
      log_abs_gamma(f.u + s) + log_abs_gamma(f.u + f.v) - log_abs_gamma(f.u + f.v + s) - log_abs_gamma(f.u);
  return std::exp(log_value);
}

MellinFactorization factorize(const Params& params) {
  params.require_p_above_one();
  if (!params.in_open_region()) {
    throw RegionError("factorize: requires -1 < r <= p - 1");
  }
  const long k = params.k(), l = params.l();
  // Positions j'_i = floor(ik/l - r) of the values i/l; everything else is
  // (r + j - i)/(k - l) for j'_i < j < j'_{i+1}.
  std::vector<Scalar> alpha_tilde(static_cast<std::size_t>(k));
  long previous = 0;
  for (long i = 0; i <= l; ++i) {
    long next = k + 1;
    if (i < l) {
      const Scalar pos = Scalar(Rational((i + 1) * k, l)) - params.r;
      next = pos.is_exact() ? pos.exact().floor().get_si() : static_cast<long>(std::floor(pos.to_double()));
    }
    for (long j = previous + 1; j < next; ++j) {
      alpha_tilde[static_cast<std::size_t>(j - 1)] = (params.r + Scalar(j - i)) / Scalar(k - l);
    }
    if (i < l) alpha_tilde[static_cast<std::size_t>(next - 1)] = Scalar(Rational(i + 1, l));
    previous = next;
  }

  MellinFactorization out;
  out.dilation = c_of_p(Scalar(params.p)).to_double();
  for (long j = 1; j <= k; ++j) {
    const Scalar beta = (params.r + Scalar(j)) / Scalar(k);
    Scalar v = alpha_tilde[static_cast<std::size_t>(j - 1)] - beta;
    double vd = v.to_double();
    if (!v.is_exact() && std::abs(vd) < 1e-14) vd = 0.0;
    if (vd < 0.0) throw RegionError("factorize: negative beta parameter (outside the region)");
    out.factors.push_back(BetaFactor{beta.to_double(), vd, l});
  }
  return out;
}

double mellin_product_moments(const MellinFactorization& f, long n) {
  double log_value = static_cast<double>(n) * std::log(f.dilation);
  for (const auto& factor : f.factors) {
    if (!factor.is_point_mass()) log_value += std::log(beta_moment(factor, n));
  }
  return std::exp(log_value);
}

}  // namespace binomoment
