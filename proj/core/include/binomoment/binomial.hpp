#pragma once

#include <vector>

#include "binomoment/scalar.hpp"

namespace binomoment {

/// Generalized binomial (np + r)(np + r - 1)...(np + r - n + 1) / n!.
/// Exact for exact p, r; compensated product otherwise.
Scalar binom_general(const Scalar& p, const Scalar& r, long n);

/// Raney number binom(np + r, n) * r / (np + r), written as
/// (r / n) * binom(np + r - 1, n - 1) so it is defined at np + r = 0.
Scalar raney_number(const Scalar& p, const Scalar& r, long n);

/// s_0 .. s_{n_max} of the binomial sequence.
std::vector<Scalar> binomial_moments(const Scalar& p, const Scalar& r, long n_max);
/// s_0 .. s_{n_max} of the Raney sequence.
std::vector<Scalar> raney_moments(const Scalar& p, const Scalar& r, long n_max);

/// c(p) = p^p (p - 1)^(1 - p) for p > 1. Exact when c(p) is rational, which
/// for p = k/l happens iff k^k / (l^l (k-l)^(k-l)) is a perfect l-th power.
Scalar c_of_p(const Scalar& p);

/// c(p)^l for p = k/l, which is always rational: k^k / (l^l (k-l)^(k-l)).
Rational c_of_p_power_l(const Rational& p);

}  // namespace binomoment
