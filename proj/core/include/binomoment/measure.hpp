#pragma once

#include <functional>
#include <string>

#include "binomoment/scalar.hpp"

namespace binomoment {

/// Density on (lower, upper). gap_lo = x - lower and gap_hi = upper - x are
/// passed separately so evaluators can stay accurate at both ends.
using DensityFn = std::function<double(double x, double gap_lo, double gap_hi)>;
using MomentFn = std::function<Scalar(long n)>;

/// A probability measure given by an atom at 0 plus a density, together with
/// its exact moment sequence. atom + integral of density = 1.
struct MeasureModel {
  double atom_at_zero = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  DensityFn density;  // empty for a purely atomic measure
  MomentFn moment_fn;
  std::string description;

  Scalar moment(long n) const { return moment_fn(n); }
  bool has_density() const { return static_cast<bool>(density); }
};

/// eta(c) = c x^(c-1) dx on [0, 1], with moments c/(n + c). Throws
/// DomainError for c <= 0.
MeasureModel eta_factor(const Scalar& c);

/// The image under x -> -x: moments pick up (-1)^n.
MeasureModel reflect(const MeasureModel& m);

}  // namespace binomoment
