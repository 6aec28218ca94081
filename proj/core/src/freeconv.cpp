#include "binomoment/freeconv.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "binomoment/binomial.hpp"
#include "binomoment/errors.hpp"
#include "binomoment/generating.hpp"

namespace binomoment {

namespace {

TruncatedSeries linear(const Scalar& c0, const Scalar& c1, int order) {
  std::vector<Scalar> v(static_cast<std::size_t>(order + 1), Scalar(0));
  v[0] = c0;
  if (order >= 1) v[1] = c1;
  return TruncatedSeries(std::move(v));
}

void require_positive(const Scalar& x, const char* what) {
  if (!(x.sign() > 0)) throw DomainError(std::string(what) + " must be positive");
}

void require_first_moment(const MomentVector& m) {
  if (m.size() < 2 || m[1].is_zero()) throw DomainError("s_transform: m_1 must be nonzero (measure is delta_0)");
}

}  // namespace

TruncatedSeries m_series(const MomentVector& m) {
  if (m.empty()) throw DomainError("m_series: empty moment vector");
  return TruncatedSeries(m);
}

MomentVector moments_of(const TruncatedSeries& m) { return MomentVector(m.coeffs().begin(), m.coeffs().end()); }

MomentVector boolean_power(const MomentVector& m, const Scalar& u) {
  require_positive(u, "boolean_power: u");
  const TruncatedSeries M = m_series(m);
  const TruncatedSeries denominator = TruncatedSeries::constant(u, M.order()) - M * (u - Scalar(1));
  return moments_of(M * reciprocal(denominator));
}

MomentVector monotonic_convolve(const MomentVector& m1, const MomentVector& m2) {
  const int order = static_cast<int>(std::min(m1.size(), m2.size())) - 1;
  const TruncatedSeries M1 = m_series(m1).truncated(order);
  const TruncatedSeries M2 = m_series(m2).truncated(order);
  const TruncatedSeries inner = multiply_by_z(M2).truncated(order);
  return moments_of(compose(M1, inner) * M2);
}

STransformSeries s_transform(const MomentVector& m) {
  require_first_moment(m);
  const TruncatedSeries M = m_series(m);
  const TruncatedSeries psi = M - TruncatedSeries::constant(Scalar(1), M.order());
  const TruncatedSeries chi = reversion(psi);
  const TruncatedSeries s = divide_by_z(chi) * linear(Scalar(1), Scalar(1), M.order() - 1);
  return STransformSeries{s};
}

MomentVector from_s_transform(const STransformSeries& s) {
  if (s.coeffs.size() == 0 || s.coeffs[0].is_zero()) throw DomainError("from_s_transform: S(0) must be nonzero");
  const int order = s.coeffs.order() + 1;
  // chi(z) = z S(z) / (1 + z), then M = 1 + chi^{<-1>}.
  const TruncatedSeries chi = multiply_by_z(s.coeffs) * reciprocal(linear(Scalar(1), Scalar(1), order));
  const TruncatedSeries psi = reversion(chi);
  return moments_of(psi + TruncatedSeries::constant(Scalar(1), order));
}

MomentVector free_mult_power(const MomentVector& m, const Scalar& w, bool formal) {
  if (!formal && w < Scalar(1)) throw DomainError("free_mult_power: w < 1 requires the formal flag");
  const STransformSeries s = s_transform(m);
  return from_s_transform(STransformSeries{pow(s.coeffs, w)});
}

MomentVector free_add_power(const MomentVector& m, const Scalar& t, bool formal) {
  require_positive(t, "free_add_power: t");
  if (!formal && t < Scalar(1)) throw DomainError("free_add_power: t < 1 requires the formal flag");
  const STransformSeries s = s_transform(m);
  const Scalar inv = Scalar(1) / t;
  return from_s_transform(STransformSeries{scale_argument(s.coeffs, inv) * inv});
}

MomentVector dilate(const MomentVector& m, const Scalar& c) {
  require_positive(c, "dilate: c");
  return moments_of(scale_argument(m_series(m), c));
}

MomentVector free_cumulants(const MomentVector& m) {
  const TruncatedSeries M = m_series(m);
  const TruncatedSeries g = reversion(multiply_by_z(M));
  return moments_of(compose(M, g).truncated(M.order()));
}

MomentVector from_free_cumulants(const MomentVector& kappa) {
  const TruncatedSeries C = m_series(kappa);
  // w = z M(z) solves w = z C(w), i.e. w is the inverse of w / C(w).
  const TruncatedSeries h = multiply_by_z(reciprocal(C));
  return moments_of(divide_by_z(reversion(h)));
}

namespace {

struct Comparison {
  bool ok = true;
  bool exact = true;
  double max_error = 0.0;

  void add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const bool both_exact = a.is_exact() && b.is_exact();
    exact = exact && both_exact;
    ok = ok && series_match(a, b, 1e-12) && std::min(a.size(), b.size()) > 0;
    max_error = std::max(max_error, max_abs_diff(a, b));
  }
  void add(const MomentVector& a, const MomentVector& b) { add(TruncatedSeries(a), TruncatedSeries(b)); }
};

MomentVector nu(const Scalar& p, const Scalar& r, int n) { return binomial_moments(p, r, n); }
MomentVector mu(const Scalar& p, const Scalar& r, int n) { return raney_moments(p, r, n); }

MomentVector bernoulli(const Scalar& alpha, const Scalar& a, int n) {
  MomentVector m(static_cast<std::size_t>(n + 1));
  m[0] = Scalar(1);
  Scalar power(1);
  for (int i = 1; i <= n; ++i) {
    power *= a;
    m[static_cast<std::size_t>(i)] = (Scalar(1) - alpha) * power;
  }
  return m;
}

Scalar q(long a, long b = 1) { return Scalar(Rational(a, b)); }

// (p-1)^(p-1) / p^p for integer p.
Scalar s_constant(long p) { return Scalar(pow(Rational(p - 1), p - 1) / pow(Rational(p), p)); }

using Check = std::function<void(Comparison&, int)>;

struct Entry {
  std::string statement;
  Check run;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> table = {
      {"boolean-nu-p0",
       {"nu(p,0) = mu(p,1)^{boolean p} for p in {2, 3, 5/2}",
        [](Comparison& c, int n) {
          for (const Scalar& p : {q(2), q(3), q(5, 2)}) c.add(boolean_power(mu(p, q(1), n), p), nu(p, q(0), n));
        }}},
      {"boolean-free-mu21",
       {"nu(p,0) = (mu(2,1)^{boxtimes p-1})^{boolean p} for p in {2, 3, 5/2}",
        [](Comparison& c, int n) {
          for (const Scalar& p : {q(2), q(3), q(5, 2)}) {
            c.add(boolean_power(free_mult_power(mu(q(2), q(1), n), p - q(1)), p), nu(p, q(0), n));
          }
        }}},
      {"monotonic-mu",
       {"mu(p,a) |> mu(p+b,b) = mu(p+b,a+b)",
        [](Comparison& c, int n) {
          const Scalar triples[][3] = {{q(2), q(1), q(1)}, {q(5, 2), q(3, 2), q(1, 2)}, {q(3), q(2), q(3, 2)}};
          for (const auto& t : triples) {
            const Scalar &p = t[0], &a = t[1], &b = t[2];
            c.add(monotonic_convolve(mu(p, a, n), mu(p + b, b, n)), mu(p + b, a + b, n));
          }
        }}},
      {"monotonic-nu",
       {"nu(p,r) |> mu(p+s,s) = nu(p+s,r+s)",
        [](Comparison& c, int n) {
          const Scalar tuples[][3] = {{q(2), q(0), q(1)}, {q(3, 2), q(-1, 2), q(1, 2)}, {q(3), q(1), q(2)}};
          for (const auto& t : tuples) {
            const Scalar &p = t[0], &r = t[1], &s = t[2];
            c.add(monotonic_convolve(nu(p, r, n), mu(p + s, s, n)), nu(p + s, r + s, n));
          }
        }}},
      {"monotonic-nu-closed",
       {"nu(p,r) |> mu(p+s,s) has M = B_{p+s}^(1+r+s) / (p - (p-1) B_{p+s})",
        [](Comparison& c, int n) {
          const Scalar tuples[][3] = {{q(2), q(0), q(1)}, {q(3, 2), q(-1, 2), q(1, 2)}, {q(3), q(1), q(2)}};
          for (const auto& t : tuples) {
            const Scalar &p = t[0], &r = t[1], &s = t[2];
            const TruncatedSeries b = fuss_series(p + s, n);
            const TruncatedSeries denom = TruncatedSeries::constant(p, n) - (p - q(1)) * b;
            c.add(m_series(monotonic_convolve(nu(p, r, n), mu(p + s, s, n))),
                  pow(b, q(1) + r + s) * reciprocal(denom));
          }
        }}},
      {"monotonic-split",
       {"nu(p,r) = mu(p-r,1)^{boolean p-r} |> mu(p,r) for (3,1), (5/2,1/2)",
        [](Comparison& c, int n) {
          const Scalar pairs[][2] = {{q(3), q(1)}, {q(5, 2), q(1, 2)}};
          for (const auto& pr : pairs) {
            const Scalar &p = pr[0], &r = pr[1];
            c.add(monotonic_convolve(boolean_power(mu(p - r, q(1), n), p - r), mu(p, r, n)), nu(p, r, n));
          }
        }}},
      {"bernoulli-free-mult",
       {"nu(p,-1) = D_{c(p)} (Bernoulli_p)^{boxtimes p} for p in {2, 3}",
        [](Comparison& c, int n) {
          for (long p : {2L, 3L}) {
            const Scalar cp = c_of_p(q(p));
            const MomentVector b = bernoulli(q(1, p), q(1), n);
            c.add(dilate(free_mult_power(b, q(p)), cp), nu(q(p), q(-1), n));
          }
        }}},
      {"bernoulli-free-add",
       {"nu(2,0) = D_2 (1/2 delta_0 + 1/2 delta_1)^{boxplus 2}",
        [](Comparison& c, int n) {
          c.add(dilate(free_add_power(bernoulli(q(1, 2), q(1), n), q(2)), q(2)), nu(q(2), q(0), n));
        }}},
      {"bernoulli-general",
       {"nu(p,0) = D_p ((Bernoulli_p)^{boxplus p/(p-1)})^{boxtimes p-1} for p in {2, 3}",
        [](Comparison& c, int n) {
          for (long p : {2L, 3L}) {
            const MomentVector b = bernoulli(q(1, p), q(1), n);
            const MomentVector added = free_add_power(b, q(p, p - 1));
            c.add(dilate(free_mult_power(added, q(p - 1)), q(p)), nu(q(p), q(0), n));
          }
        }}},
      {"s-mu21",
       {"S_{mu(2,1)}(z) = (1+z)^-1",
        [](Comparison& c, int n) {
          const TruncatedSeries s = s_transform(mu(q(2), q(1), n)).coeffs;
          c.add(s, reciprocal(linear(q(1), q(1), s.order())));
        }}},
      {"s-mu-p1",
       {"S_{mu(p,1)}(z) = (1+z)^(1-p) for p in {3, 5/2, 7/2}",
        [](Comparison& c, int n) {
          for (const Scalar& p : {q(3), q(5, 2), q(7, 2)}) {
            const TruncatedSeries s = s_transform(mu(p, q(1), n)).coeffs;
            c.add(s, pow(linear(q(1), q(1), s.order()), q(1) - p));
          }
        }}},
      {"s-nu-p0",
       {"S_{nu(p,0)}(z) = ((p-1)^(p-1)/p^p) ((p/(p-1) + z)/(1+z))^(p-1) for p in {2, 3}",
        [](Comparison& c, int n) {
          for (long p : {2L, 3L}) {
            const TruncatedSeries s = s_transform(nu(q(p), q(0), n)).coeffs;
            const int order = s.order();
            const TruncatedSeries base = linear(q(p, p - 1), q(1), order) * reciprocal(linear(q(1), q(1), order));
            c.add(s, pow(base, q(p - 1)) * s_constant(p));
          }
        }}},
      {"s-nu-pm1",
       {"S_{nu(p,-1)}(z) = ((p-1)^(p-1)/p^p) ((1+z)/((p-1)/p + z))^p for p in {2, 3}",
        [](Comparison& c, int n) {
          for (long p : {2L, 3L}) {
            const TruncatedSeries s = s_transform(nu(q(p), q(-1), n)).coeffs;
            const int order = s.order();
            const TruncatedSeries base = linear(q(1), q(1), order) * reciprocal(linear(q(p - 1, p), q(1), order));
            c.add(s, pow(base, q(p)) * s_constant(p));
          }
        }}},
      {"s-bernoulli",
       {"S of alpha delta_0 + (1-alpha) delta_a is (1+z)/(a(1-alpha+z))",
        [](Comparison& c, int n) {
          const Scalar cases[][2] = {{q(1, 2), q(1)}, {q(1, 3), q(2)}, {q(3, 4), q(5, 2)}};
          for (const auto& ca : cases) {
            const Scalar &alpha = ca[0], &a = ca[1];
            const TruncatedSeries s = s_transform(bernoulli(alpha, a, n)).coeffs;
            const int order = s.order();
            const TruncatedSeries expected =
                linear(q(1), q(1), order) * reciprocal(linear(q(1) - alpha, q(1), order)) / a;
            c.add(s, expected);
          }
        }}},
      {"free-mult-mu21",
       {"mu(2,1)^{boxtimes p-1} = mu(p,1) for p in {3, 4, 5/2}",
        [](Comparison& c, int n) {
          for (const Scalar& p : {q(3), q(4), q(5, 2)}) {
            c.add(free_mult_power(mu(q(2), q(1), n), p - q(1)), mu(p, q(1), n));
          }
        }}},
      {"s-roundtrip",
       {"from_s_transform(s_transform(m)) = m",
        [](Comparison& c, int n) {
          for (const auto& m : {nu(q(3), q(1, 2), n), mu(q(7, 3), q(2, 3), n), bernoulli(q(1, 5), q(3), n)}) {
            c.add(from_s_transform(s_transform(m)), m);
          }
        }}},
      {"s-defining-relation",
       {"M(z/(1+z) S(z)) = 1 + z",
        [](Comparison& c, int n) {
          for (const auto& m : {nu(q(2), q(0), n), mu(q(5, 2), q(1), n), nu(q(5, 3), q(1, 3), n)}) {
            const TruncatedSeries s = s_transform(m).coeffs;
            const int order = s.order() + 1;
            const TruncatedSeries inner = multiply_by_z(s) * reciprocal(linear(q(1), q(1), order));
            c.add(compose(m_series(m).truncated(order), inner), linear(q(1), q(1), order));
          }
        }}},
      {"s-dilation",
       {"S_{D_c mu} = S_mu / c",
        [](Comparison& c, int n) {
          const MomentVector m = nu(q(3), q(1), n);
          for (const Scalar& d : {q(2), q(1, 3), q(27, 4)}) {
            c.add(s_transform(dilate(m, d)).coeffs, s_transform(m).coeffs / d);
          }
        }}},
      {"monotonic-associative",
       {"(m1 |> m2) |> m3 = m1 |> (m2 |> m3)",
        [](Comparison& c, int n) {
          const MomentVector a = nu(q(2), q(0), n), b = mu(q(3), q(1), n), d = bernoulli(q(1, 3), q(2), n);
          c.add(monotonic_convolve(monotonic_convolve(a, b), d), monotonic_convolve(a, monotonic_convolve(b, d)));
        }}},
      {"boolean-group-law",
       {"(m^{boolean u})^{boolean 1/u} = m",
        [](Comparison& c, int n) {
          const MomentVector m = nu(q(5, 2), q(1, 2), n);
          for (const Scalar& u : {q(2), q(3, 7), q(5)}) c.add(boolean_power(boolean_power(m, u), q(1) / u), m);
        }}},
      {"r-transform-bernoulli",
       {"boxplus via S scaling equals cumulant scaling on Bernoulli laws",
        [](Comparison& c, int n) {
          for (const Scalar& t : {q(2), q(3, 2), q(5)}) {
            const MomentVector b = bernoulli(q(1, 2), q(1), n);
            MomentVector kappa = free_cumulants(b);
            for (std::size_t i = 1; i < kappa.size(); ++i) kappa[i] *= t;
            c.add(free_add_power(b, t), from_free_cumulants(kappa));
          }
        }}},
  };
  return table;
}

}  // namespace

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, entry] : registry()) ids.push_back(id);
  return ids;
}

IdentityCheck run_identity(const std::string& id, int n_moments) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw DomainError("unknown identity: " + id);
  Comparison cmp;
  it->second.run(cmp, n_moments);
  IdentityCheck out;
  out.id = id;
  out.statement = it->second.statement;
  out.passed = cmp.ok;
  out.exact = cmp.exact;
  out.max_error = cmp.max_error;
  return out;
}

std::vector<IdentityCheck> run_identity_suite(int n_moments) {
  std::vector<IdentityCheck> out;
  for (const auto& id : identity_ids()) out.push_back(run_identity(id, n_moments));
  return out;
}

}  // namespace binomoment
