#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "binomoment/rational.hpp"

namespace binomoment {

/// Either an exact rational or a double. Arithmetic between two exact values
/// stays exact; anything touching a double becomes a double.
class Scalar {
 public:
  Scalar() : value_(Rational{}) {}
  Scalar(int n) : value_(Rational(n)) {}
  Scalar(long n) : value_(Rational(n)) {}
  Scalar(Rational q) : value_(std::move(q)) {}
  Scalar(double x) : value_(x) {}

  /// "k/l" and decimals with at most six fractional digits parse exactly;
  /// anything else (longer decimals, exponents, nan) parses as a double.
  static Scalar parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  /// Throws DomainError for a double.
  const Rational& exact() const;
  double to_double() const;
  /// The same value, forced to double.
  Scalar as_float() const { return Scalar(to_double()); }

  bool is_zero() const;
  bool is_integer() const;
  int sign() const;
  /// Integers and k/l print exactly; doubles print with 17 significant digits.
  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  /// Exact comparison when both are exact, double comparison otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  std::variant<Rational, double> value_;
};

/// base^w. Exact when base is exact and w is an integer, or when the
/// rational power happens to be rational; a double otherwise.
Scalar pow(const Scalar& base, const Scalar& w);
Scalar abs(const Scalar& x);
std::string format_double(double x);

}  // namespace binomoment
