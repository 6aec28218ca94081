#pragma once

#include "binomoment/params.hpp"
#include "binomoment/series.hpp"

namespace binomoment {

inline constexpr int kDefaultSeriesOrder = 32;

enum class GenFunKind {
  FussB,       // B_p, the solution of B = 1 + z B^p
  BinomialD,   // D_{p,r} = sum binom(np + r, n) z^n
  RaneyPower,  // B_p^r
};

/// B_p: coefficient n is binom(np + 1, n) / (np + 1).
TruncatedSeries fuss_series(const Scalar& p, int order);
/// B_p^r by Lambert's formula: coefficient n is the Raney number.
TruncatedSeries raney_series(const Scalar& p, const Scalar& r, int order);
/// D_{p,r}: coefficient n is binom(np + r, n).
TruncatedSeries binomial_series(const Scalar& p, const Scalar& r, int order);
TruncatedSeries binomial_series(const Params& params, int order);
TruncatedSeries generating_function(GenFunKind kind, const Scalar& p, const Scalar& r, int order);

/// D_{p,r} assembled from B_p alone: B^(1+r) / (p - (p - 1) B).
TruncatedSeries d_series_from_b(const Scalar& p, const Scalar& r, int order);

/// B = 1 + z B^p mod z^(N+1) for B = fuss_series(p, N).
bool check_b_functional_equation(const Scalar& p, int order);
/// The same check applied to an arbitrary candidate series.
bool check_b_functional_equation(const Scalar& p, const TruncatedSeries& candidate);

/// D_{p,-1} = 1/p + ((p-1)/p) D_{p,0} and D_{p,p-1} = (D_{p,0} - 1)/(pz).
bool check_prop21(const Scalar& p, int order);

/// D_{p,r}(z) = D_{1-p,-1-r}(-z) mod z^(N+1).
bool reflection_check(const Scalar& p, const Scalar& r, int order);

/// Radius of the disc on which closed_form_d is evaluated.
double closed_form_radius(const Rational& p);
/// Elementary D_{p,r}(z) for p in {0, 1, -1, 2, 1/2, 3, 3/2}. Throws
/// DomainError for another p or |z| >= radius.
double closed_form_d(const Rational& p, double r, double z);

}  // namespace binomoment
