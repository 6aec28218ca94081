#pragma once

#include <optional>

#include "binomoment/measure.hpp"
#include "binomoment/params.hpp"
#include "binomoment/slater.hpp"

namespace binomoment {

enum class ClosedFormKind {
  V2,       // p = 2, any real r
  V3,       // p = 3, r in {0, 1, 2}
  V32,      // p = 3/2, r in {-1/2, 0, 1/2}
  A091527,  // V_{3/2,-1/2}(x/4)/4 on (0, 6 sqrt 3)
  A061162,  // V(sqrt x)/(2 sqrt x) with V the A091527 density, on (0, 108)
};

struct ClosedFormId {
  ClosedFormKind kind = ClosedFormKind::V2;
  double r = 0.0;
};

/// Right end of the support of the closed-form density.
double closed_form_upper(const ClosedFormId& id);

/// The elementary density at x. edge_gap, when given, is upper - x.
/// Throws DomainError outside the open support or for an r the kind does not
/// cover.
double eval_closed(const ClosedFormId& id, double x, double edge_gap = kNoGap);

/// The closed form covering (p, r), if there is one.
std::optional<ClosedFormId> closed_form_for(const Params& params);

/// nu(p, r) for (p, r) in the positive definite region with p > 1 rational,
/// or its reflection for p < 0. For r = -1 the atom 1/p sits at 0 and the
/// density is ((p-1)/p) V_{p,0}. Throws RegionError otherwise.
MeasureModel measure_model(const Params& params);

}  // namespace binomoment
