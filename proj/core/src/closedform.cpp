#include "binomoment/closedform.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "binomoment/binomial.hpp"
#include "binomoment/classify.hpp"
#include "binomoment/errors.hpp"

namespace binomoment {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

bool same(double a, double b) { return std::abs(a - b) <= 1e-12; }

// Two-term form A(1+s)^e1 z^f1 + A(1+s)^e2 z^f2 with s = sqrt(w), w = 1 - z.
// z enters through log z so that tiny x does not underflow.
double two_term(double log_z, double w, double scale, double e1, double f1, double e2, double f2) {
  const double s = std::sqrt(w);
  return (std::pow(1.0 + s, e1) * std::exp(f1 * log_z) + std::pow(1.0 + s, e2) * std::exp(f2 * log_z)) /
         (scale * s);
}

double v3(double r, double x, double gap) {
  const double z = std::log(4.0 / 27.0) + std::log(x);
  const double w = 4.0 * gap / 27.0;
  if (same(r, 0.0)) return two_term(z, w, 9.0 * kPi * kSqrt3, 1.0 / 3, -2.0 / 3, -1.0 / 3, -1.0 / 3);
  if (same(r, 1.0)) return two_term(z, w, 6.0 * kPi * kSqrt3, 2.0 / 3, -1.0 / 3, -2.0 / 3, 1.0 / 3);
  if (same(r, 2.0)) return two_term(z, w, 4.0 * kPi * kSqrt3, 1.0 / 3, 1.0 / 3, -1.0 / 3, 2.0 / 3);
  throw DomainError("eval_closed: V3 needs r in {0, 1, 2}");
}

double v32(double r, double x, double gap) {
  const double c = std::sqrt(27.0) / 2.0;
  const double z = std::log(4.0 / 27.0) + 2.0 * std::log(x);
  const double g = gap / c;
  const double w = g * (2.0 - g);
  if (same(r, -0.5)) return two_term(z, w, 3.0 * kPi * kSqrt3, 2.0 / 3, -1.0 / 3, -2.0 / 3, 1.0 / 3);
  if (same(r, 0.0)) return two_term(z, w, 3.0 * kPi, 1.0 / 3, -1.0 / 6, -1.0 / 3, 1.0 / 6);
  if (same(r, 0.5)) return two_term(z, w, kPi * kSqrt3, 1.0 / 3, 1.0 / 3, -1.0 / 3, 2.0 / 3);
  throw DomainError("eval_closed: V32 needs r in {-1/2, 0, 1/2}");
}

double v2(double r, double x, double gap) {
  const double angle = std::acos(std::sqrt(x / 4.0));
  return std::cos(r * angle) / (kPi * std::sqrt(std::pow(x, 1.0 - r) * gap));
}

}  // namespace

double closed_form_upper(const ClosedFormId& id) {
  switch (id.kind) {
    case ClosedFormKind::V2: return 4.0;
    case ClosedFormKind::V3: return 27.0 / 4.0;
    case ClosedFormKind::V32: return std::sqrt(27.0) / 2.0;
    case ClosedFormKind::A091527: return 6.0 * kSqrt3;
    case ClosedFormKind::A061162: return 108.0;
  }
  throw DomainError("unknown closed form");
}

double eval_closed(const ClosedFormId& id, double x, double edge_gap) {
  const double upper = closed_form_upper(id);
  const double gap = std::isnan(edge_gap) ? upper - x : edge_gap;
  if (!(x > 0.0) || !(gap > 0.0) || !(x < upper || !std::isnan(edge_gap))) {
    throw DomainError("eval_closed: x must lie in (0, " + format_double(upper) + ")");
  }
  // Every kind behaves like K / sqrt(gap) at the upper end; this keeps 4 gap / 27 and
  // similar rescalings from rounding a subnormal gap to 0.
  constexpr double kTinyGap = 1e-200;
  if (gap < kTinyGap) return eval_closed(id, upper, kTinyGap) * std::sqrt(kTinyGap / gap);
  switch (id.kind) {
    case ClosedFormKind::V2: return v2(id.r, x, gap);
    case ClosedFormKind::V3: return v3(id.r, x, gap);
    case ClosedFormKind::V32: return v32(id.r, x, gap);
    case ClosedFormKind::A091527: return v32(-0.5, x / 4.0, gap / 4.0) / 4.0;
    case ClosedFormKind::A061162: {
      const double root = std::sqrt(x);
      // 6 sqrt3 - sqrt x = (108 - x) / (6 sqrt3 + sqrt x)
      const double root_gap = gap / (6.0 * kSqrt3 + root);
      return eval_closed({ClosedFormKind::A091527, -0.5}, root, root_gap) / (2.0 * root);
    }
  }
  throw DomainError("unknown closed form");
}

std::optional<ClosedFormId> closed_form_for(const Params& params) {
  if (!params.r.is_exact()) {
    if (params.p == Rational(2)) return ClosedFormId{ClosedFormKind::V2, params.r_value()};
    return std::nullopt;
  }
  const Rational& r = params.r.exact();
  if (params.p == Rational(2)) return ClosedFormId{ClosedFormKind::V2, r.to_double()};
  if (params.p == Rational(3) && (r == Rational(0) || r == Rational(1) || r == Rational(2))) {
    return ClosedFormId{ClosedFormKind::V3, r.to_double()};
  }
  if (params.p == Rational(3, 2) && (r == Rational(-1, 2) || r == Rational(0) || r == Rational(1, 2))) {
    return ClosedFormId{ClosedFormKind::V32, r.to_double()};
  }
  return std::nullopt;
}

MeasureModel measure_model(const Params& params) {
  const Scalar p(params.p);
  if (!classify_binomial(p, params.r).positive_definite) {
    throw RegionError("measure_model: (" + params.p.str() + ", " + params.r.str() +
                      ") is outside the positive definite region");
  }
  if (params.p.sign() < 0) {
    return reflect(measure_model(Params(Rational(1) - params.p, Scalar(-1) - params.r)));
  }
  if (!(params.p > Rational(1))) {
    throw RegionError("measure_model: no density model for 0 <= p <= 1");
  }

  MeasureModel m;
  m.upper = c_of_p(p).to_double();
  const Scalar r = params.r;
  m.moment_fn = [p, r](long n) { return binom_general(p, r, n); };
  m.description = "nu(" + params.p.str() + ", " + r.str() + ")";

  const bool atom = r.is_exact() ? r.exact() == Rational(-1) : r.to_double() == -1.0;
  const Params base = atom ? Params(params.p, Scalar(0)) : params;
  const double weight = atom ? (params.p_value() - 1.0) / params.p_value() : 1.0;
  if (atom) m.atom_at_zero = 1.0 / params.p_value();

  if (const auto id = closed_form_for(base)) {
    m.density = [id = *id, weight](double x, double, double gap_hi) { return weight * eval_closed(id, x, gap_hi); };
    m.description += " [closed form]";
  } else {
    auto expansion = std::make_shared<const SlaterExpansion>(build_slater(base));
    m.density = [expansion, weight](double x, double, double gap_hi) {
      return weight * eval_V(*expansion, x, gap_hi);
    };
    m.description += " [Slater]";
  }
  return m;
}

}  // namespace binomoment
