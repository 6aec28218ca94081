#include "binomoment/binomial.hpp"

#include <cmath>

#include "binomoment/errors.hpp"

namespace binomoment {

namespace {

Rational binom_exact(const Rational& p, const Rational& r, long n) {
  const Rational top = Rational(n) * p + r;
  Rational numerator(1);
  mpz_class factorial = 1;
  for (long i = 0; i < n; ++i) {
    numerator *= top - Rational(i);
    factorial *= i + 1;
  }
  return numerator / Rational(factorial, mpz_class(1));
}

// Product of (top - i)/(i + 1), i < n, tracking the rounding error of every
// quotient and product (Graillat's compensated product with inexact factors).
double binom_float(double p, double r, long n) {
  const double top = static_cast<double>(n) * p + r;
  const double top_err = std::fma(static_cast<double>(n), p, -static_cast<double>(n) * p);
  double prod = 1.0;
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const double num = top - static_cast<double>(i);
    // Error of the subtraction: num_true = top + top_err - i.
    const double num_err = ((top - num) - static_cast<double>(i)) + top_err;
    const double den = static_cast<double>(i + 1);
    const double q = num / den;
    const double q_err = (std::fma(-q, den, num) + num_err) / den;
    const double next = prod * q;
    const double mul_err = std::fma(prod, q, -next);
    err = err * q + prod * q_err + mul_err;
    prod = next;
  }
  return prod + err;
}

}  // namespace

Scalar binom_general(const Scalar& p, const Scalar& r, long n) {
  if (n < 0) throw DomainError("binom_general: negative n");
  if (n == 0) return p.is_exact() && r.is_exact() ? Scalar(1) : Scalar(1.0);
  if (p.is_exact() && r.is_exact()) return Scalar(binom_exact(p.exact(), r.exact(), n));
  return Scalar(binom_float(p.to_double(), r.to_double(), n));
}

Scalar raney_number(const Scalar& p, const Scalar& r, long n) {
  if (n < 0) throw DomainError("raney_number: negative n");
  if (n == 0) return p.is_exact() && r.is_exact() ? Scalar(1) : Scalar(1.0);
  // binom(a, n) r / a = (r / n) binom(a - 1, n - 1) with a = np + r, and
  // a - 1 = (n - 1) p + (p + r - 1).
  return r / Scalar(n) * binom_general(p, p + r - Scalar(1), n - 1);
}

std::vector<Scalar> binomial_moments(const Scalar& p, const Scalar& r, long n_max) {
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) out.push_back(binom_general(p, r, n));
  return out;
}

std::vector<Scalar> raney_moments(const Scalar& p, const Scalar& r, long n_max) {
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) out.push_back(raney_number(p, r, n));
  return out;
}

Rational c_of_p_power_l(const Rational& p) {
  if (p <= Rational(1)) throw DomainError("c(p) requires p > 1, got " + p.str());
  const mpz_class& k = p.numerator();
  const mpz_class& l = p.denominator();
  const mpz_class d = k - l;
  if (!k.fits_ulong_p() || !l.fits_ulong_p()) throw DomainError("c(p): p too large");
  mpz_class kk, ll, dd;
  mpz_pow_ui(kk.get_mpz_t(), k.get_mpz_t(), k.get_ui());
  mpz_pow_ui(ll.get_mpz_t(), l.get_mpz_t(), l.get_ui());
  mpz_pow_ui(dd.get_mpz_t(), d.get_mpz_t(), d.get_ui());
  return Rational(kk, ll * dd);
}

Scalar c_of_p(const Scalar& p) {
  if (p <= Scalar(1)) throw DomainError("c(p) requires p > 1, got " + p.str());
  if (p.is_exact()) {
    const Rational power = c_of_p_power_l(p.exact());
    const unsigned long l = p.exact().denominator().get_ui();
    if (l == 1) return Scalar(power);
    if (auto root = exact_root(power, l)) return Scalar(*root);
    return Scalar(std::pow(power.to_double(), 1.0 / static_cast<double>(l)));
  }
  const double x = p.to_double();
  return Scalar(std::exp(x * std::log(x) - (x - 1.0) * std::log(x - 1.0)));
}

}  // namespace binomoment
