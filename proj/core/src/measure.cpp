#include "binomoment/measure.hpp"

#include <cmath>

#include "binomoment/errors.hpp"

namespace binomoment {

MeasureModel eta_factor(const Scalar& c) {
  if (!(c.sign() > 0)) throw DomainError("eta_factor: c must be positive");
  MeasureModel m;
  m.lower = 0.0;
  m.upper = 1.0;
  const double cd = c.to_double();
  m.density = [cd](double x, double, double) { return cd * std::pow(x, cd - 1.0); };
  m.moment_fn = [c](long n) { return c / (Scalar(n) + c); };
  m.description = "eta(" + c.str() + ")";
  return m;
}

MeasureModel reflect(const MeasureModel& m) {
  MeasureModel out;
  out.atom_at_zero = m.atom_at_zero;
  out.lower = -m.upper;
  out.upper = -m.lower;
  if (m.density) {
    out.density = [f = m.density](double x, double gap_lo, double gap_hi) { return f(-x, gap_hi, gap_lo); };
  }
  out.moment_fn = [g = m.moment_fn](long n) { return n % 2 == 0 ? g(n) : -g(n); };
  out.description = "reflect(" + m.description + ")";
  return out;
}

}  // namespace binomoment
