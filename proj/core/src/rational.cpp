#include "binomoment/rational.hpp"

#include <cmath>
#include <cstring>
#include <limits>

#include "binomoment/errors.hpp"

namespace binomoment {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw DomainError("Rational::parse: empty string");

  auto parse_int = [](const std::string& t) {
    mpz_class z;
    std::string digits = t;
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    if (digits.empty() || digits == "-" || z.set_str(digits, 10) != 0) {
      throw DomainError("Rational::parse: bad integer '" + t + "'");
    }
    return z;
  };

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    trim(num);
    trim(den);
    return Rational(parse_int(num), parse_int(den));
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    const bool negative = !s.empty() && s.front() == '-';
    std::string int_part = s.substr(0, dot);
    const std::string frac_part = s.substr(dot + 1);
    if (int_part.empty() || int_part == "-" || int_part == "+") int_part += "0";
    for (char c : frac_part) {
      if (c < '0' || c > '9') throw DomainError("Rational::parse: bad decimal '" + s + "'");
    }
    const mpz_class whole = parse_int(int_part);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    const mpz_class frac = frac_part.empty() ? mpz_class(0) : parse_int(frac_part);
    const mpz_class magnitude = abs(whole) * scale + frac;
    return Rational(negative ? mpz_class(-magnitude) : magnitude, scale);
  }
  return Rational(parse_int(s), mpz_class(1));
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("Rational::from_double: non-finite value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(std::move(q));
}

std::optional<Rational> Rational::reconstruct(double x, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents of the exact binary value.
  const Rational exact = from_double(x);
  mpz_class h_prev = 1, h = exact.floor();
  mpz_class k_prev = 0, k = 1;
  Rational rest = exact - Rational(h, mpz_class(1));
  for (int iter = 0; iter < 64; ++iter) {
    const Rational candidate(h, k);
    if (candidate.to_double() == x) return candidate;
    if (rest.is_zero()) break;
    const Rational inv = Rational(1) / rest;
    const mpz_class a = inv.floor();
    rest = inv - Rational(a, mpz_class(1));
    const mpz_class h_next = a * h + h_prev;
    const mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

double Rational::to_double() const {
  // mpq_get_d truncates; pick whichever neighbour is nearer.
  const double t = mpq_get_d(value_.get_mpq_t());
  if (!std::isfinite(t)) return t;
  const double away = std::nextafter(t, sgn(value_) >= 0 ? std::numeric_limits<double>::infinity()
                                                          : -std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return t;
  const mpq_class dt = abs(value_ - from_double(t).value_);
  const mpq_class da = abs(value_ - from_double(away).value_);
  const int c = cmp(da, dt);
  if (c < 0) return away;
  if (c > 0) return t;
  // Tie: round half to even mantissa.
  std::int64_t bits = 0;
  static_assert(sizeof(bits) == sizeof(t));
  std::memcpy(&bits, &t, sizeof(t));
  return (bits & 1) ? away : t;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& q, long n) {
  if (n < 0) {
    if (q.is_zero()) throw DomainError("pow: zero to a negative power");
    return pow(Rational(1) / q, -n);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(num, den);
}

std::optional<Rational> exact_root(const Rational& q, unsigned long n) {
  if (n == 0) throw DomainError("exact_root: zeroth root");
  if (q.sign() < 0) return std::nullopt;
  mpz_class num, den;
  if (mpz_root(num.get_mpz_t(), q.numerator().get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), q.denominator().get_mpz_t(), n) == 0) return std::nullopt;
  return Rational(num, den);
}

}  // namespace binomoment
