#include "binomoment/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "binomoment/errors.hpp"

namespace binomoment {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPoleTolerance = 1e-8;

// Series part of the Lanczos sum for Gamma(z + 1), z >= -1/2.
double lanczos_sum(double z) {
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  return sum;
}

// Gamma(x) for x >= 1/2.
double gamma_lanczos(double x) {
  if (x == std::floor(x) && x <= 23.0) {
    double f = 1.0;
    for (int i = 2; i < static_cast<int>(x); ++i) f *= i;
    return f;
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // Split the power so t^(z+1/2) does not overflow before exp(-t) applies.
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma_lanczos(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

[[noreturn]] void throw_pole(double x) {
  throw PoleError("Gamma pole at x = " + std::to_string(x));
}

}  // namespace

double sin_pi(double x) {
  // x - 2*round(x/2) is exact for doubles; the result lies in [-1, 1].
  double r = x - 2.0 * std::nearbyint(0.5 * x);
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double distance_to_pole(double x) {
  if (x > 0.5) return std::numeric_limits<double>::infinity();
  const double nearest = std::min(0.0, std::nearbyint(x));
  return std::abs(x - nearest);
}

double gamma_real(double x) {
  if (std::isnan(x)) return x;
  if (distance_to_pole(x) < kPoleTolerance) throw_pole(x);
  if (x >= 0.5) return gamma_lanczos(x);
  return std::numbers::pi / (sin_pi(x) * gamma_lanczos(1.0 - x));
}

double log_abs_gamma(double x) {
  if (distance_to_pole(x) < kPoleTolerance) throw_pole(x);
  if (x >= 0.5) {
    if (x < 100.0) return std::log(gamma_lanczos(x));
    return log_gamma_lanczos(x);
  }
  return std::log(std::numbers::pi / std::abs(sin_pi(x))) - log_abs_gamma(1.0 - x);
}

int gamma_sign(double x) {
  if (x > 0) return 1;
  if (distance_to_pole(x) < kPoleTolerance) throw_pole(x);
  // Gamma alternates sign between consecutive negative integers.
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
}

double reciprocal_gamma(double x) {
  if (x >= 0.5) {
    if (x > 170.0) return std::exp(-log_gamma_lanczos(x));
    return 1.0 / gamma_lanczos(x);
  }
  if (x == std::floor(x)) return 0.0;
  return sin_pi(x) * gamma_lanczos(1.0 - x) / std::numbers::pi;
}

}  // namespace binomoment
