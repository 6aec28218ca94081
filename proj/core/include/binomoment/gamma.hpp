#pragma once

namespace binomoment {

/// Gamma function on the reals: Lanczos approximation (g = 7, nine terms)
/// for x >= 1/2 and the reflection formula below that. Throws PoleError
/// within 1e-8 of a nonpositive integer.
double gamma_real(double x);

/// log|Gamma(x)|, usable far beyond the overflow threshold of gamma_real.
double log_abs_gamma(double x);

/// Sign of Gamma(x) (+1 or -1); x must not be a pole.
int gamma_sign(double x);

/// 1/Gamma(x), an entire function: exactly 0 at nonpositive integers.
double reciprocal_gamma(double x);

/// sin(pi x) with exact argument reduction.
double sin_pi(double x);

/// Distance from x to the nearest nonpositive integer, or +inf for x > 0.5.
double distance_to_pole(double x);

}  // namespace binomoment
