#include "binomoment/slater.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "binomoment/binomial.hpp"
#include "binomoment/errors.hpp"
#include "binomoment/gamma.hpp"
#include "binomoment/hypergeometric.hpp"
#include "binomoment/quadrature.hpp"

namespace binomoment {

namespace {

constexpr double kFitLo = 1e-3;
constexpr double kFitHi = 0.06;
constexpr int kFitNodes = 16;

// A value that may be known exactly; used to decide pole membership without
// rounding when r is exact.
struct Arg {
  double value;
  std::optional<Rational> exact;
};

// Nonpositive integer -m, or nullopt.
std::optional<long> pole_index(const Arg& x, double tol) {
  if (x.exact) {
    if (x.exact->is_integer() && x.exact->sign() <= 0) return -x.exact->numerator().get_si();
    return std::nullopt;
  }
  const double n = std::nearbyint(x.value);
  if (n <= 0.0 && std::abs(x.value - n) <= tol * std::max(1.0, std::abs(x.value))) return static_cast<long>(-n);
  return std::nullopt;
}

Arg make_arg(const Scalar& s) {
  if (s.is_exact()) return {s.to_double(), s.exact()};
  return {s.to_double(), std::nullopt};
}

// log|Gamma| and sign accumulator.
struct LogProduct {
  double log_abs = 0.0;
  int sign = 1;
  void multiply_gamma(double x) {
    log_abs += log_abs_gamma(x);
    sign *= gamma_sign(x);
  }
  void divide_gamma(double x) {
    log_abs -= log_abs_gamma(x);
    sign *= gamma_sign(x);
  }
  double value() const { return sign * std::exp(log_abs); }
};

double chebyshev_eval(const std::vector<double>& c, double t) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t j = c.size(); j-- > 1;) {
    const double b0 = 2.0 * t * b1 - b2 + c[j];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

// Direct Slater sum with log(x/c) supplied.
VEvaluation eval_direct(const SlaterExpansion& e, double log_ratio) {
  const double log_z = static_cast<double>(e.l) * log_ratio;
  const double z = std::exp(log_z);
  VEvaluation out;
  double sum = 0.0;
  for (const auto& term : e.terms) {
    if (term.c == 0.0) continue;
    const PfqResult f = pfq(term.a, term.b, z);
    out.precision_loss = out.precision_loss || f.precision_loss;
    sum += term.c * f.value * std::exp(term.exponent * log_z);
  }
  out.value = e.gamma * sum;
  return out;
}

EndpointFit fit_endpoint(const SlaterExpansion& e) {
  EndpointFit fit;
  fit.w_lo = kFitLo;
  fit.w_hi = kFitHi;
  const double mid = 0.5 * (kFitHi + kFitLo), half = 0.5 * (kFitHi - kFitLo);
  std::vector<double> values(kFitNodes);
  for (int i = 0; i < kFitNodes; ++i) {
    const double t = std::cos(std::numbers::pi * (i + 0.5) / kFitNodes);
    const double w = mid + half * t;
    const double log_ratio = std::log1p(-w) / static_cast<double>(e.l);
    values[static_cast<std::size_t>(i)] = std::sqrt(w) * eval_direct(e, log_ratio).value;
  }
  fit.coeffs.assign(kFitNodes, 0.0);
  for (int j = 0; j < kFitNodes; ++j) {
    double s = 0.0;
    for (int i = 0; i < kFitNodes; ++i) {
      s += values[static_cast<std::size_t>(i)] * std::cos(std::numbers::pi * j * (i + 0.5) / kFitNodes);
    }
    fit.coeffs[static_cast<std::size_t>(j)] = 2.0 * s / kFitNodes;
  }
  fit.coeffs[0] *= 0.5;
  return fit;
}

}  // namespace

GammaQuotientSymbol build_symbol(const Params& params) {
  params.require_p_above_one();
  GammaQuotientSymbol s;
  s.k = params.k();
  s.l = params.l();
  const double r = params.r_value();
  const double k = static_cast<double>(s.k), l = static_cast<double>(s.l);
  for (long j = 1; j <= s.k; ++j) {
    s.alphas.push_back(j <= s.l ? j / l : (r + static_cast<double>(j - s.l)) / (k - l));
    s.betas.push_back((r + static_cast<double>(j)) / k);
  }
  s.scale = c_of_p(Scalar(params.p)).to_double();
  if (!params.in_open_region()) return s;

  // j'_i = floor(ik/l - r), with j'_0 = 0 and j'_{l+1} = k + 1.
  std::vector<long> jp(static_cast<std::size_t>(s.l + 2));
  jp[0] = 0;
  jp[static_cast<std::size_t>(s.l + 1)] = s.k + 1;
  for (long i = 1; i <= s.l; ++i) {
    if (params.r.is_exact()) {
      const Rational v = Rational(i * s.k, s.l) - params.r.exact();
      jp[static_cast<std::size_t>(i)] = v.floor().get_si();
    } else {
      jp[static_cast<std::size_t>(i)] = static_cast<long>(std::floor(i * k / l - r));
    }
  }
  s.alphas_tilde.assign(static_cast<std::size_t>(s.k), 0.0);
  for (long i = 0; i <= s.l; ++i) {
    const long at = jp[static_cast<std::size_t>(i)];
    if (i >= 1) s.alphas_tilde[static_cast<std::size_t>(at - 1)] = i / l;
    for (long j = at + 1; j < jp[static_cast<std::size_t>(i + 1)]; ++j) {
      s.alphas_tilde[static_cast<std::size_t>(j - 1)] = (r + static_cast<double>(j - i)) / (k - l);
    }
  }
  s.j_prime.assign(jp.begin() + 1, jp.end() - 1);
  return s;
}

double psi(const Params& params, double sigma) {
  params.require_p_above_one();
  const double p = params.p_value();
  const double r = params.r_value();
  Arg a{(sigma - 1.0) * p + r + 1.0, std::nullopt};
  Arg s{sigma, std::nullopt};
  Arg b{(sigma - 1.0) * (p - 1.0) + r + 1.0, std::nullopt};
  if (params.r.is_exact() && std::isfinite(sigma)) {
    const Rational sig = Rational::from_double(sigma);
    const Rational& rr = params.r.exact();
    a.exact = (sig - Rational(1)) * params.p + rr + Rational(1);
    s.exact = sig;
    b.exact = (sig - Rational(1)) * (params.p - Rational(1)) + rr + Rational(1);
  }
  constexpr double tol = 1e-12;
  const auto pa = pole_index(a, tol), ps = pole_index(s, tol), pb = pole_index(b, tol);
  const int numerator_poles = pa ? 1 : 0;
  const int denominator_poles = (ps ? 1 : 0) + (pb ? 1 : 0);
  if (numerator_poles > denominator_poles) throw PoleError("psi: pole at sigma = " + format_double(sigma));
  if (numerator_poles < denominator_poles) return 0.0;

  // Gamma(x0 + slope eps) ~ (-1)^m / (m! slope eps) near x0 = -m.
  LogProduct out;
  auto residue = [](long m, double slope) {
    return std::make_pair(-std::lgamma(static_cast<double>(m) + 1.0) - std::log(slope), (m % 2 == 0) ? 1 : -1);
  };
  if (pa) {
    const auto [lg, sg] = residue(*pa, p);
    out.log_abs += lg;
    out.sign *= sg;
  } else {
    out.multiply_gamma(a.value);
  }
  if (ps) {
    const auto [lg, sg] = residue(*ps, 1.0);
    out.log_abs -= lg;
    out.sign *= sg;
  } else {
    out.divide_gamma(s.value);
  }
  if (pb) {
    const auto [lg, sg] = residue(*pb, p - 1.0);
    out.log_abs -= lg;
    out.sign *= sg;
  } else {
    out.divide_gamma(b.value);
  }
  return out.value();
}

SlaterExpansion build_slater(const Params& params) {
  params.require_p_above_one();
  SlaterExpansion e;
  e.k = params.k();
  e.l = params.l();
  e.p = params.p_value();
  e.r = params.r_value();
  const double k = static_cast<double>(e.k), l = static_cast<double>(e.l);
  const double p = e.p, r = e.r;
  e.domain_upper = c_of_p(Scalar(params.p)).to_double();
  e.z_scale = c_of_p_power_l(params.p).to_double();
  e.gamma = l * std::pow(p - 1.0, p - r - 1.0) /
            (std::pow(p, p - r - 0.5) * std::sqrt(2.0 * std::numbers::pi * (k - l)));

  // alpha_j as exact values when r is exact.
  std::vector<Arg> alpha(static_cast<std::size_t>(e.k));
  for (long j = 1; j <= e.k; ++j) {
    Scalar v = j <= e.l ? Scalar(Rational(j, e.l))
                        : (params.r + Scalar(j - e.l)) / Scalar(e.k - e.l);
    alpha[static_cast<std::size_t>(j - 1)] = make_arg(v);
  }

  for (long h = 1; h <= e.k; ++h) {
    SlaterTerm term;
    const Scalar beta_h = (params.r + Scalar(h)) / Scalar(e.k);
    const double bh = beta_h.to_double();

    LogProduct c;
    for (long j = 1; j <= e.k; ++j) {
      if (j != h) c.multiply_gamma(static_cast<double>(j - h) / k);
    }
    bool vanishes = false;
    for (long j = 1; j <= e.k; ++j) {
      const Arg& aj = alpha[static_cast<std::size_t>(j - 1)];
      Arg d{aj.value - bh, std::nullopt};
      if (aj.exact && beta_h.is_exact()) d.exact = *aj.exact - beta_h.exact();
      if (d.exact) {
        if (pole_index(d, 0.0)) {
          vanishes = true;
          continue;
        }
        c.divide_gamma(d.value);
      } else if (distance_to_pole(d.value) < 1e-9) {
        // Near a pole 1/Gamma is small and smooth; keep it continuous in r.
        const double rg = reciprocal_gamma(d.value);
        if (rg == 0.0) {
          vanishes = true;
          continue;
        }
        c.log_abs += std::log(std::abs(rg));
        c.sign *= rg < 0 ? -1 : 1;
      } else {
        c.divide_gamma(d.value);
      }
      term.a.push_back(1.0 + bh - aj.value);
    }
    if (vanishes) {
      // Still record the parameters for inspection.
      term.a.clear();
      for (long j = 1; j <= e.k; ++j) term.a.push_back(1.0 + bh - alpha[static_cast<std::size_t>(j - 1)].value);
    }
    term.c = vanishes ? 0.0 : c.value();
    for (long j = 1; j <= e.k; ++j) {
      if (j != h) term.b.push_back(static_cast<double>(e.k + h - j) / k);
    }
    term.exponent = bh - 1.0 / l;
    e.terms.push_back(std::move(term));
  }
  e.endpoint = fit_endpoint(e);
  return e;
}

VEvaluation eval_V_detailed(const SlaterExpansion& e, double x, double edge_gap) {
  const double c = e.domain_upper;
  const bool have_gap = !std::isnan(edge_gap);
  if (!(x > 0.0) || !(have_gap ? edge_gap > 0.0 : x < c)) {
    throw DomainError("eval_V: x must lie in (0, " + format_double(c) + ")");
  }
  // The gap only carries information near the upper end; near 0 it rounds to c.
  const bool use_gap = have_gap && edge_gap < 0.5 * c;
  const double log_ratio = use_gap ? std::log1p(-edge_gap / c) : std::log(x / c);
  double w = -std::expm1(static_cast<double>(e.l) * log_ratio);
  double sqrt_w = std::sqrt(w);
  if (use_gap && edge_gap < 1e-200) {
    // w = l gap / c to first order; scaled so a subnormal gap cannot round w to 0.
    const double scaled = static_cast<double>(e.l) * (edge_gap * 0x1p200) / c;
    w = scaled * 0x1p-200;
    sqrt_w = std::sqrt(scaled) * 0x1p-100;
  }
  if (w < e.endpoint.w_hi) {
    const double mid = 0.5 * (e.endpoint.w_hi + e.endpoint.w_lo);
    const double half = 0.5 * (e.endpoint.w_hi - e.endpoint.w_lo);
    VEvaluation out;
    out.value = chebyshev_eval(e.endpoint.coeffs, (w - mid) / half) / sqrt_w;
    out.endpoint_continued = w < e.endpoint.w_lo;
    return out;
  }
  return eval_direct(e, log_ratio);
}

double eval_V(const SlaterExpansion& e, double x, double edge_gap) { return eval_V_detailed(e, x, edge_gap).value; }

RaneyDensity::RaneyDensity(const Params& params)
    : base_(build_slater(Params(params.p, params.r - Scalar(1)))) {
  const double r = params.r_value(), p = params.p_value();
  if (!(r > 0.0 && r <= p)) throw RegionError("raney_density_W: requires 0 < r <= p");
  c_ = r / (p - 1.0);
}

double RaneyDensity::operator()(double x, double edge_gap) const {
  const double upper = base_.domain_upper;
  const bool have_gap = !std::isnan(edge_gap);
  if (!(x > 0.0) || !(have_gap ? edge_gap > 0.0 : x < upper)) {
    throw DomainError("raney_density_W: x must lie in (0, " + format_double(upper) + ")");
  }
  const double gap = have_gap ? edge_gap : upper - x;
  QuadratureSpec spec;
  spec.target_abs_tol = 1e-13;
  spec.max_levels = 10;
  const double c = c_;
  // Tail piece over [upper - width, upper], integrated in u = upper - y so
  // that widths below the spacing of doubles near upper stay nonempty.
  auto tail = [&](double width) {
    return integrate(
               [&](double u, double, double) { return eval_V(base_, upper - u, u) * std::pow(upper - u, -c); },
               0.0, width, spec)
        .value;
  };
  const double split = 0.5 * upper;
  if (x >= split) {
    return c * std::exp((c - 1.0) * std::log(x)) * tail(gap);
  }
  // c int_0^T V(x e^t) e^{t(1-c)} dt over [x, split].
  // x e^t is formed as exp(log x + t): e^t alone overflows for subnormal x.
  const double log_x = std::log(x);
  const double t_max = std::log(split) - log_x;
  const double head = integrate(
                          [&](double t, double, double) {
                            return eval_V(base_, std::exp(log_x + t)) * std::exp(t * (1.0 - c));
                          },
                          0.0, t_max, spec)
                          .value;
  return c * head + c * std::exp((c - 1.0) * std::log(x)) * tail(upper - split);
}

double raney_density_W(const Params& params, double x) { return RaneyDensity(params)(x); }

}  // namespace binomoment
