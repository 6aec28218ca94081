#include "binomoment/scalar.hpp"

#include <cmath>
#include <cstdio>

#include "binomoment/errors.hpp"

namespace binomoment {

namespace {

bool is_plain_decimal(std::string_view s, std::size_t& frac_digits) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  bool seen_digit = false, seen_dot = false;
  frac_digits = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      return false;
    }
  }
  return seen_digit;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::size_t frac_digits = 0;
  if (text.find('/') != std::string_view::npos) return Scalar(Rational::parse(text));
  if (is_plain_decimal(text, frac_digits) && frac_digits <= 6) return Scalar(Rational::parse(text));
  const std::string s(text);
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw DomainError("cannot parse number '" + s + "'");
  return Scalar(x);
}

const Rational& Scalar::exact() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw DomainError("exact rational required, got floating-point value " + str());
}

double Scalar::to_double() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->to_double();
  return std::get<double>(value_);
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->is_zero();
  return std::get<double>(value_) == 0.0;
}

bool Scalar::is_integer() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->is_integer();
  const double x = std::get<double>(value_);
  return std::isfinite(x) && std::floor(x) == x;
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->sign();
  const double x = std::get<double>(value_);
  return (x > 0) - (x < 0);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->str();
  return format_double(std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) += o.exact();
  } else {
    value_ = to_double() + o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) -= o.exact();
  } else {
    value_ = to_double() - o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) *= o.exact();
  } else {
    value_ = to_double() * o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) /= o.exact();
  } else {
    value_ = to_double() / o.to_double();
  }
  return *this;
}

Scalar operator-(const Scalar& a) {
  if (a.is_exact()) return Scalar(-a.exact());
  return Scalar(-a.to_double());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_double() == b.to_double();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.to_double() < b.to_double();
}

Scalar pow(const Scalar& base, const Scalar& w) {
  if (base.is_exact() && w.is_exact()) {
    const Rational& q = base.exact();
    const Rational& e = w.exact();
    if (e.is_integer() && e.numerator().fits_slong_p()) {
      return Scalar(pow(q, e.numerator().get_si()));
    }
    if (q.sign() >= 0 && e.denominator().fits_ulong_p() && e.numerator().fits_slong_p()) {
      if (auto root = exact_root(q, e.denominator().get_ui())) {
        return Scalar(pow(*root, e.numerator().get_si()));
      }
    }
  }
  return Scalar(std::pow(base.to_double(), w.to_double()));
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

}  // namespace binomoment
