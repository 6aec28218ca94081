#include "binomoment/generating.hpp"

#include <cmath>
#include <numbers>

#include "binomoment/binomial.hpp"
#include "binomoment/errors.hpp"

namespace binomoment {

namespace {

TruncatedSeries from_terms(const std::vector<Scalar>& terms) { return TruncatedSeries(terms); }

}  // namespace

TruncatedSeries fuss_series(const Scalar& p, int order) { return raney_series(p, Scalar(1), order); }

TruncatedSeries raney_series(const Scalar& p, const Scalar& r, int order) {
  return from_terms(raney_moments(p, r, order));
}

TruncatedSeries binomial_series(const Scalar& p, const Scalar& r, int order) {
  return from_terms(binomial_moments(p, r, order));
}

TruncatedSeries binomial_series(const Params& params, int order) {
  return binomial_series(Scalar(params.p), params.r, order);
}

TruncatedSeries generating_function(GenFunKind kind, const Scalar& p, const Scalar& r, int order) {
  switch (kind) {
    case GenFunKind::FussB: return fuss_series(p, order);
    case GenFunKind::BinomialD: return binomial_series(p, r, order);
    case GenFunKind::RaneyPower: return raney_series(p, r, order);
  }
  throw DomainError("unknown generating function kind");
}

TruncatedSeries d_series_from_b(const Scalar& p, const Scalar& r, int order) {
  const TruncatedSeries b = fuss_series(p, order);
  const TruncatedSeries numerator = pow(b, Scalar(1) + r);
  const TruncatedSeries denominator = TruncatedSeries::constant(p, order) - b * (p - Scalar(1));
  return numerator * reciprocal(denominator);
}

bool check_b_functional_equation(const Scalar& p, int order) {
  return check_b_functional_equation(p, fuss_series(p, order));
}

bool check_b_functional_equation(const Scalar& p, const TruncatedSeries& candidate) {
  const int order = candidate.order();
  if (order < 0 || candidate[0].is_zero()) return false;
  const TruncatedSeries rhs =
      TruncatedSeries::constant(Scalar(1), order) + multiply_by_z(pow(candidate, p)).truncated(order);
  return series_match(candidate, rhs);
}

bool check_prop21(const Scalar& p, int order) {
  if (p.is_zero()) throw DomainError("check_prop21: p must be nonzero");
  const TruncatedSeries d0 = binomial_series(p, Scalar(0), order + 1);
  const TruncatedSeries d_minus_one = binomial_series(p, Scalar(-1), order);
  const TruncatedSeries d_top = binomial_series(p, p - Scalar(1), order);

  const TruncatedSeries first =
      TruncatedSeries::constant(Scalar(1) / p, order) + d0.truncated(order) * ((p - Scalar(1)) / p);
  const TruncatedSeries second =
      divide_by_z(d0 - TruncatedSeries::constant(Scalar(1), order + 1)) / p;
  return series_match(d_minus_one, first) && series_match(d_top, second);
}

bool reflection_check(const Scalar& p, const Scalar& r, int order) {
  const TruncatedSeries lhs = binomial_series(p, r, order);
  const TruncatedSeries rhs = negate_argument(binomial_series(Scalar(1) - p, Scalar(-1) - r, order));
  return series_match(lhs, rhs);
}

double closed_form_radius(const Rational& p) {
  if (p == Rational(0) || p == Rational(1)) return 1.0;
  if (p == Rational(-1) || p == Rational(2)) return 0.25;
  if (p == Rational(1, 2)) return 2.0;
  if (p == Rational(3)) return 4.0 / 27.0;
  if (p == Rational(3, 2)) return 2.0 / (3.0 * std::sqrt(3.0));
  throw DomainError("closed_form_d: no elementary form for p = " + p.str());
}

double closed_form_d(const Rational& p, double r, double z) {
  const double radius = closed_form_radius(p);
  if (!(std::abs(z) < radius)) {
    throw DomainError("closed_form_d: |z| must be below " + format_double(radius));
  }
  if (p == Rational(0)) return std::pow(1.0 + z, r);
  if (p == Rational(1)) return std::pow(1.0 - z, -1.0 - r);
  if (p == Rational(-1)) {
    const double s = std::sqrt(1.0 + 4.0 * z);
    return std::pow((1.0 + s) / 2.0, 1.0 + r) / s;
  }
  if (p == Rational(2)) {
    const double s = std::sqrt(1.0 - 4.0 * z);
    return std::pow(2.0 / (1.0 + s), r) / s;
  }
  if (p == Rational(1, 2)) {
    const double t = z * std::sqrt(4.0 + z * z);
    return 4.0 * std::pow((2.0 + z * z + t) / 2.0, 1.0 + r) / (4.0 + z * z + t);
  }
  if (p == Rational(3)) {
    // alpha = asin(sqrt(27z/4))/3; for z < 0 alpha is imaginary and the
    // squares continue through cosh/sinh.
    double c2, s2;
    if (z >= 0) {
      const double alpha = std::asin(std::sqrt(27.0 * z / 4.0)) / 3.0;
      c2 = std::cos(alpha) * std::cos(alpha);
      s2 = std::sin(alpha) * std::sin(alpha);
    } else {
      const double theta = std::asinh(std::sqrt(-27.0 * z / 4.0)) / 3.0;
      c2 = std::cosh(theta) * std::cosh(theta);
      s2 = -std::sinh(theta) * std::sinh(theta);
    }
    const double b = 3.0 / (3.0 * c2 - s2);
    return std::pow(b, r) / (c2 - 3.0 * s2);
  }
  // p = 3/2
  const double sqrt3 = std::numbers::sqrt3;
  const double beta = std::asin(3.0 * z * sqrt3 / 2.0) / 3.0;
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double lead = sqrt3 * cb - sb;
  return std::pow(3.0 / (lead * lead), r) / (cb * (cb - sqrt3 * sb));
}

}  // namespace binomoment
