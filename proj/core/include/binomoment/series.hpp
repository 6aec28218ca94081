#pragma once

#include <span>
#include <vector>

#include "binomoment/scalar.hpp"

namespace binomoment {

/// Power series truncated at z^N: coefficients c_0 .. c_N. Binary operations
/// truncate to the smaller order. All arithmetic is exact when every
/// coefficient is exact.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Scalar> coeffs);

  static TruncatedSeries constant(const Scalar& c, int order);
  /// The series z (0, 1, 0, ...).
  static TruncatedSeries variable(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const Scalar& operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const Scalar> coeffs() const { return coeffs_; }
  bool is_exact() const;

  TruncatedSeries truncated(int order) const;
  std::vector<double> to_doubles() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Scalar& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& c) { return a *= c; }
  friend TruncatedSeries operator*(const Scalar& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator/(TruncatedSeries a, const Scalar& c);

 private:
  std::vector<Scalar> coeffs_;
};

/// 1/f; requires f(0) != 0.
TruncatedSeries reciprocal(const TruncatedSeries& f);
/// outer(inner(z)); requires inner(0) = 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);
/// The compositional inverse g with f(g(z)) = z; requires f(0) = 0, f'(0) != 0.
TruncatedSeries reversion(const TruncatedSeries& f);
/// log f; requires f(0) = 1.
TruncatedSeries log(const TruncatedSeries& f);
/// exp f; requires f(0) = 0.
TruncatedSeries exp(const TruncatedSeries& f);
/// f^w = f(0)^w exp(w log(f / f(0))); requires f(0) != 0 (and > 0 unless w
/// is an integer).
TruncatedSeries pow(const TruncatedSeries& f, const Scalar& w);

TruncatedSeries derivative(const TruncatedSeries& f);
/// f(z)/z, order N - 1; requires f(0) = 0.
TruncatedSeries divide_by_z(const TruncatedSeries& f);
/// z f(z), order N + 1.
TruncatedSeries multiply_by_z(const TruncatedSeries& f);
/// f(c z).
TruncatedSeries scale_argument(const TruncatedSeries& f, const Scalar& c);
/// f(-z).
TruncatedSeries negate_argument(const TruncatedSeries& f);

/// Coefficientwise agreement up to the smaller order: exact equality when
/// both series are exact, |a_n - b_n| <= rel_tol * max(1, |a_n|, |b_n|)
/// otherwise.
bool series_match(const TruncatedSeries& a, const TruncatedSeries& b, double rel_tol = 1e-12);
/// Largest coefficient difference up to the smaller order, as a double.
double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace binomoment
