#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binomoment/freeconv.hpp"
#include "binomoment/measure.hpp"
#include "binomoment/params.hpp"
#include "binomoment/quadrature.hpp"

namespace binomoment {

/// int x^n density(x) dx over the support (the atom is not included).
QuadratureResult integrate_density(const MeasureModel& m, long n, const QuadratureSpec& spec = {});
/// int x^s density(x) dx for real s; the support must lie in [0, inf).
QuadratureResult integrate_density_power(const MeasureModel& m, double s, const QuadratureSpec& spec = {});

struct MomentCheck {
  long n = 0;
  double expected = 0.0;
  double computed = 0.0;  // integral plus the atom at n = 0
  double error = 0.0;
  double quadrature_error = 0.0;
  bool passed = false;
};

struct CertifyReport {
  std::string p;
  std::string r;
  std::string model;
  double atom = 0.0;
  double rel_tol = 0.0;
  std::vector<MomentCheck> moments;
  bool passed = false;
  double runtime_seconds = 0.0;
};

/// Checks |integral + atom 0^n - binom(np + r, n)| <= rel_tol max(1, binom)
/// for n = 0..n_max against measure_model(params).
CertifyReport certify_measure(const Params& params, long n_max, double rel_tol = 1e-7,
                              const QuadratureSpec& spec = {});

/// Smallest eigenvalue of the (d+1)x(d+1) Hankel matrix (s_{i+j}).
/// Requires 2d < moments.size().
double hankel_matrix_min_eig(const std::vector<double>& moments, int d);
double hankel_matrix_min_eig(const MomentVector& moments, int d);

enum class WitnessKind { NegativeDensityPoint, NegativeEvenMoment, NegativeHankel };
std::string to_string(WitnessKind kind);

struct Witness {
  WitnessKind kind = WitnessKind::NegativeDensityPoint;
  double location = 0.0;  // x for a density point
  long index = 0;         // moment index or Hankel depth
  double value = 0.0;
};

inline constexpr double kWitnessTolerance = 1e-9;
inline constexpr int kWitnessDecades = 12;
inline constexpr int kWitnessHankelDepth = 6;

/// Looks for a certificate that the binomial sequence of (p, r), p > 1
/// rational, is not positive definite: the density V_{p,r} at
/// x = c(p) 10^-j (j = 1..12), then negative even moments s_{2n} (n <= 6),
/// then the Hankel matrices of depth d <= 6 built from s_n / c(p)^n.
/// Returns nullopt when the budget is exhausted.
std::optional<Witness> search_negativity_witness(const Params& params);

/// As search_negativity_witness, but throws InconclusiveError when nothing
/// is found.
Witness find_negativity_witness(const Params& params);

}  // namespace binomoment
