#pragma once

#include <string>
#include <vector>

#include "binomoment/series.hpp"

namespace binomoment {

/// Moments m_0 = 1, m_1, ..., m_N.
using MomentVector = std::vector<Scalar>;

/// S_mu as a series around 0; S(0) = 1/m_1.
struct STransformSeries {
  TruncatedSeries coeffs;
};

/// M(z) = sum m_n z^n.
TruncatedSeries m_series(const MomentVector& m);
MomentVector moments_of(const TruncatedSeries& m);

/// M / (u - (u - 1) M). Requires u > 0.
MomentVector boolean_power(const MomentVector& m, const Scalar& u);

/// M_1(z M_2(z)) M_2(z).
MomentVector monotonic_convolve(const MomentVector& m1, const MomentVector& m2);

/// S from M(z/(1+z) S(z)) = 1 + z, via the inverse chi of M - 1:
/// S(z) = chi(z)(1 + z)/z. The result has order N - 1. Requires m_1 != 0.
STransformSeries s_transform(const MomentVector& m);
/// Inverse of s_transform: N = order(S) + 1 moments plus m_0.
MomentVector from_s_transform(const STransformSeries& s);

/// mu^{boxtimes w}: S -> S^w. Requires w >= 1 unless formal is set.
MomentVector free_mult_power(const MomentVector& m, const Scalar& w, bool formal = false);
/// mu^{boxplus t}: S(z) -> S(z/t)/t. Requires t >= 1 unless formal is set.
MomentVector free_add_power(const MomentVector& m, const Scalar& t, bool formal = false);
/// m_n -> c^n m_n. Requires c > 0.
MomentVector dilate(const MomentVector& m, const Scalar& c);

/// Free cumulants kappa_1..kappa_N (index 0 holds 1) from M(z) = C(z M(z)),
/// C(w) = 1 + sum kappa_n w^n; the R-transform is sum kappa_n z^(n-1).
MomentVector free_cumulants(const MomentVector& m);
MomentVector from_free_cumulants(const MomentVector& kappa);

struct IdentityCheck {
  std::string id;
  std::string statement;
  bool passed = false;
  bool exact = true;  // compared in exact arithmetic
  double max_error = 0.0;
};

/// Names accepted by run_identity.
std::vector<std::string> identity_ids();
/// Runs one named identity at moments 0..n_moments. Throws DomainError for an
/// unknown id.
IdentityCheck run_identity(const std::string& id, int n_moments = 12);
std::vector<IdentityCheck> run_identity_suite(int n_moments = 12);

}  // namespace binomoment
