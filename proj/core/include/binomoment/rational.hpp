#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace binomoment {

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator. Backed by GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}
  Rational(long value) : value_(value) {}
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Accepts "k", "k/l" and plain decimals such as "-1.25" (taken exactly).
  static Rational parse(std::string_view text);
  /// The exact binary value of a finite double.
  static Rational from_double(double x);
  /// The simplest rational with denominator <= max_den that rounds to exactly
  /// x, if any.
  static std::optional<Rational> reconstruct(double x, long max_den = 1'000'000);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  /// Correctly rounded (round-to-nearest) conversion.
  double to_double() const;
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  mpz_class floor() const;
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& q);
/// q^n for any integer n (n < 0 requires q != 0).
Rational pow(const Rational& q, long n);
/// The exact positive n-th root of q >= 0 when it is rational.
std::optional<Rational> exact_root(const Rational& q, unsigned long n);

}  // namespace binomoment
