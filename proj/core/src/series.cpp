#include "binomoment/series.hpp"

#include <algorithm>
#include <cmath>

#include "binomoment/errors.hpp"

namespace binomoment {

namespace {

void require_nonempty(const TruncatedSeries& f, const char* what) {
  if (f.size() == 0) throw DomainError(std::string(what) + ": empty series");
}

bool is_one(const Scalar& x) {
  if (x.is_exact()) return x.exact() == Rational(1);
  return std::abs(x.to_double() - 1.0) <= 1e-14;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(const Scalar& c, int order) {
  std::vector<Scalar> v(static_cast<std::size_t>(order + 1), Scalar(0));
  v[0] = c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::variable(int order) {
  std::vector<Scalar> v(static_cast<std::size_t>(order + 1), Scalar(0));
  if (order >= 1) v[1] = Scalar(1);
  return TruncatedSeries(std::move(v));
}

bool TruncatedSeries::is_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_exact(); });
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  const auto n = std::min(coeffs_.size(), static_cast<std::size_t>(order + 1));
  return TruncatedSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

std::vector<double> TruncatedSeries::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_double());
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  std::vector<Scalar> v(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : v) x = -x;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<Scalar> v(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      v[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator/(TruncatedSeries a, const Scalar& c) {
  if (c.is_zero()) throw DomainError("series divided by zero");
  return a *= (Scalar(1) / c);
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  require_nonempty(f, "reciprocal");
  if (f[0].is_zero()) throw DomainError("reciprocal: f(0) = 0");
  const std::size_t n = f.size();
  const Scalar inv0 = Scalar(1) / f[0];
  std::vector<Scalar> g(n, Scalar(0));
  g[0] = inv0;
  for (std::size_t m = 1; m < n; ++m) {
    Scalar acc(0);
    for (std::size_t k = 1; k <= m; ++k) {
      if (!f[k].is_zero()) acc += f[k] * g[m - k];
    }
    g[m] = -acc * inv0;
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  require_nonempty(outer, "compose");
  require_nonempty(inner, "compose");
  if (!inner[0].is_zero()) throw DomainError("compose: inner series must vanish at 0");
  const int order = std::min(outer.order(), inner.order());
  const TruncatedSeries f = inner.truncated(order);
  // Horner's scheme in the ring of truncated series.
  TruncatedSeries result = TruncatedSeries::constant(outer[static_cast<std::size_t>(order)], order);
  for (int i = order - 1; i >= 0; --i) {
    result = result * f;
    std::vector<Scalar> v(result.coeffs().begin(), result.coeffs().end());
    v[0] += outer[static_cast<std::size_t>(i)];
    result = TruncatedSeries(std::move(v));
  }
  return result;
}

TruncatedSeries reversion(const TruncatedSeries& f) {
  require_nonempty(f, "reversion");
  if (f.order() < 1) throw DomainError("reversion: series of order >= 1 required");
  if (!f[0].is_zero()) throw DomainError("reversion: f(0) must be 0");
  if (f[1].is_zero()) throw DomainError("reversion: f'(0) must be nonzero");
  // Lagrange inversion: [z^n] g = (1/n) [w^(n-1)] (w / f(w))^n.
  const int order = f.order();
  const TruncatedSeries h = reciprocal(divide_by_z(f));  // order N - 1
  std::vector<Scalar> g(static_cast<std::size_t>(order + 1), Scalar(0));
  TruncatedSeries h_power = h;
  for (int n = 1; n <= order; ++n) {
    if (n > 1) h_power = h_power * h;
    g[static_cast<std::size_t>(n)] = h_power[static_cast<std::size_t>(n - 1)] / Scalar(n);
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries log(const TruncatedSeries& f) {
  require_nonempty(f, "log");
  if (!is_one(f[0])) throw DomainError("log: f(0) must be 1");
  const std::size_t n = f.size();
  std::vector<Scalar> g(n, Scalar(0));
  // n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}   (from f g' = f').
  for (std::size_t m = 1; m < n; ++m) {
    Scalar acc = Scalar(static_cast<long>(m)) * f[m];
    for (std::size_t k = 1; k < m; ++k) {
      if (g[k].is_zero() || f[m - k].is_zero()) continue;
      acc -= Scalar(static_cast<long>(k)) * g[k] * f[m - k];
    }
    g[m] = acc / Scalar(static_cast<long>(m));
  }
  if (!f[0].is_exact()) g[0] = Scalar(0.0);
  return TruncatedSeries(std::move(g));
}

TruncatedSeries exp(const TruncatedSeries& f) {
  require_nonempty(f, "exp");
  if (!f[0].is_zero()) throw DomainError("exp: f(0) must be 0");
  const std::size_t n = f.size();
  std::vector<Scalar> g(n, Scalar(0));
  g[0] = f[0].is_exact() ? Scalar(1) : Scalar(1.0);
  // n g_n = sum_{k=1}^{n} k f_k g_{n-k}   (from g' = f' g).
  for (std::size_t m = 1; m < n; ++m) {
    Scalar acc(0);
    for (std::size_t k = 1; k <= m; ++k) {
      if (f[k].is_zero()) continue;
      acc += Scalar(static_cast<long>(k)) * f[k] * g[m - k];
    }
    g[m] = acc / Scalar(static_cast<long>(m));
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries pow(const TruncatedSeries& f, const Scalar& w) {
  require_nonempty(f, "pow");
  const Scalar& f0 = f[0];
  if (f0.is_zero()) throw DomainError("pow: f(0) must be nonzero");
  if (f0.sign() < 0 && !w.is_integer()) throw DomainError("pow: negative f(0) with non-integer exponent");
  const Scalar lead = pow(f0, w);
  const TruncatedSeries normalized = f / f0;
  return exp(log(normalized) * w) * lead;
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  if (f.size() <= 1) return TruncatedSeries::constant(Scalar(0), 0);
  std::vector<Scalar> v;
  v.reserve(f.size() - 1);
  for (std::size_t n = 1; n < f.size(); ++n) v.push_back(Scalar(static_cast<long>(n)) * f[n]);
  return TruncatedSeries(std::move(v));
}

TruncatedSeries divide_by_z(const TruncatedSeries& f) {
  require_nonempty(f, "divide_by_z");
  if (!f[0].is_zero()) throw DomainError("divide_by_z: f(0) must be 0");
  if (f.size() == 1) throw DomainError("divide_by_z: order-0 series");
  return TruncatedSeries(std::vector<Scalar>(f.coeffs().begin() + 1, f.coeffs().end()));
}

TruncatedSeries multiply_by_z(const TruncatedSeries& f) {
  std::vector<Scalar> v;
  v.reserve(f.size() + 1);
  v.push_back(f.size() && !f[0].is_exact() ? Scalar(0.0) : Scalar(0));
  v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
  return TruncatedSeries(std::move(v));
}

TruncatedSeries scale_argument(const TruncatedSeries& f, const Scalar& c) {
  std::vector<Scalar> v(f.coeffs().begin(), f.coeffs().end());
  Scalar power(1);
  for (auto& x : v) {
    x *= power;
    power *= c;
  }
  return TruncatedSeries(std::move(v));
}

TruncatedSeries negate_argument(const TruncatedSeries& f) { return scale_argument(f, Scalar(-1)); }

bool series_match(const TruncatedSeries& a, const TruncatedSeries& b, double rel_tol) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_exact() && b[i].is_exact()) {
      if (!(a[i] == b[i])) return false;
      continue;
    }
    const double x = a[i].to_double(), y = b[i].to_double();
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    if (!(std::abs(x - y) <= rel_tol * scale)) return false;
  }
  return true;
}

double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = (a[i].is_exact() && b[i].is_exact()) ? (a[i] - b[i]).to_double()
                                                           : a[i].to_double() - b[i].to_double();
    worst = std::max(worst, std::abs(d));
  }
  return worst;
}

}  // namespace binomoment
