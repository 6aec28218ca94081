#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "binomoment/binomial.hpp"
#include "binomoment/classify.hpp"
#include "binomoment/errors.hpp"
#include "binomoment/gamma.hpp"
#include "binomoment/params.hpp"
#include "binomoment/rational.hpp"
#include "binomoment/scalar.hpp"
#include "support/convert.hpp"
#include "support/oracles.hpp"

using namespace binomoment;
using oracle::q;
using testing_support::equals;
using testing_support::to_scalar;

TEST(Rational, StaysReducedWithPositiveDenominator) {
  const Rational x(6, -4);
  EXPECT_EQ(x.numerator(), -3);
  EXPECT_EQ(x.denominator(), 2);
  EXPECT_EQ(Rational::parse("-1.25"), Rational(-5, 4));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ((Rational(1, 3) + Rational(1, 6)).str(), "1/2");
}

TEST(Rational, ReconstructFindsShortFractions) {
  EXPECT_EQ(*Rational::reconstruct(0.75), Rational(3, 4));
  EXPECT_EQ(*Rational::reconstruct(1.0 / 3.0), Rational(1, 3));
  EXPECT_FALSE(Rational::reconstruct(std::numbers::pi).has_value());
}

TEST(Scalar, ExactArithmeticStaysExactAndMixedPromotes) {
  const Scalar a(Rational(1, 3)), b(Rational(2, 3));
  EXPECT_TRUE((a + b).is_exact());
  EXPECT_EQ(a + b, Scalar(1));
  EXPECT_FALSE((a + Scalar(0.5)).is_exact());
  EXPECT_NEAR((a * Scalar(0.5)).to_double(), 1.0 / 6.0, 1e-16);
}

TEST(Scalar, ParseRulesForDecimals) {
  EXPECT_TRUE(Scalar::parse("0.123456").is_exact());
  EXPECT_FALSE(Scalar::parse("0.1234567").is_exact());
  EXPECT_TRUE(Scalar::parse("-7/3").is_exact());
  EXPECT_FALSE(Scalar::parse("1e-3").is_exact());
  EXPECT_THROW(Scalar::parse("abc"), DomainError);
}

TEST(Params, ReducesAndChecksP) {
  const Params pr(Rational(6, 4), Scalar(0));
  EXPECT_EQ(pr.k(), 3);
  EXPECT_EQ(pr.l(), 2);
  EXPECT_NO_THROW(pr.require_p_above_one());
  EXPECT_THROW(Params(Rational(1), Scalar(0)).require_p_above_one(), RegionError);
}

TEST(CofP, SupportEndpoints) {
  EXPECT_TRUE(equals(c_of_p(Scalar(2)), q(4)));
  EXPECT_TRUE(equals(c_of_p(Scalar(3)), q(27, 4)));
  const Scalar c32 = c_of_p(Scalar(Rational(3, 2)));
  EXPECT_FALSE(c32.is_exact());
  EXPECT_NEAR(c32.to_double(), std::sqrt(27.0) / 2.0, 1e-15);
  EXPECT_THROW(c_of_p(Scalar(1)), DomainError);
  EXPECT_THROW(c_of_p(Scalar(Rational(1, 2))), DomainError);
}

TEST(CofP, PowerLIsAlwaysRational) {
  // c(3/2)^2 = 27/4
  EXPECT_EQ(c_of_p_power_l(Rational(3, 2)), Rational(27, 4));
  EXPECT_EQ(c_of_p_power_l(Rational(5, 3)), Rational(3125, 108));
}

TEST(BinomGeneral, MatchesFallingFactorialOracle) {
  EXPECT_TRUE(equals(binom_general(Scalar(3), Scalar(0), 2), q(15)));
  EXPECT_TRUE(equals(binom_general(Scalar(Rational(7, 3)), Scalar(Rational(-2, 5)), 0), q(1)));
  // 4^n binom(2n - 1/2, n) = binom(4n, 2n)
  EXPECT_TRUE(equals(binom_general(Scalar(2), Scalar(Rational(-1, 2)), 1) * Scalar(4), q(6)));
  // 16 binom(5/2, 2) = 30, the third A091527 term
  EXPECT_TRUE(equals(binom_general(Scalar(Rational(3, 2)), Scalar(Rational(-1, 2)), 2) * Scalar(16), q(30)));
}

TEST(BinomGeneral, FloatInputsStayAccurate) {
  const double p = 2.3, r = 0.7;
  for (long n : {5L, 40L, 150L}) {
    const double got = binom_general(Scalar(p), Scalar(r), n).to_double();
    const double a = n * p + r;
    const double ref = std::exp(std::lgamma(a + 1) - std::lgamma(n + 1.0) - std::lgamma(a - n + 1));
    EXPECT_NEAR(got / ref, 1.0, 1e-12) << n;
  }
}

TEST(BinomGeneral, ReflectionIdentityIsExact) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const mpq_class p = oracle::random_rational(rng, 5, 7), r = oracle::random_rational(rng, 5, 7);
    for (long n = 0; n <= 50; n += 7) {
      const Scalar lhs = binom_general(to_scalar(p), to_scalar(r), n) * Scalar(n % 2 ? -1 : 1);
      const Scalar rhs = binom_general(to_scalar(1 - p), to_scalar(-1 - r), n);
      ASSERT_EQ(lhs, rhs) << p << ' ' << r << ' ' << n;
    }
  }
}

TEST(BinomGeneral, ThreeWayFussIdentity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    mpq_class p = oracle::random_rational(rng, 6, 9);
    if (p == 0 || p == 1) continue;
    const Scalar ps = to_scalar(p);
    for (long n = 0; n <= 30; ++n) {
      const Scalar a = binom_general(ps, Scalar(-1), n + 1) / (ps - Scalar(1));
      const Scalar b = binom_general(ps, Scalar(0), n + 1) / ps;
      const Scalar c = binom_general(ps, ps - Scalar(1), n);
      ASSERT_EQ(a, b);
      ASSERT_EQ(b, c);
    }
  }
}

TEST(BinomialMoments, AgreeWithOracle) {
  const auto m = binomial_moments(Scalar(Rational(5, 3)), Scalar(Rational(1, 3)), 12);
  for (long n = 0; n <= 12; ++n) EXPECT_TRUE(equals(m[n], oracle::binomial_moment(q(5, 3), q(1, 3), n)));
  const auto rn = raney_moments(Scalar(3), Scalar(2), 10);
  for (long n = 0; n <= 10; ++n) EXPECT_TRUE(equals(rn[n], oracle::raney_moment(q(3), q(2), n)));
}

TEST(Classify, BinomialExamples) {
  auto v = classify_binomial(Scalar(2), Scalar(0.5));
  EXPECT_TRUE(v.positive_definite);
  EXPECT_EQ(v.branch, Branch::MainBranch);
  v = classify_binomial(Scalar(-1), Scalar(-1.5));
  EXPECT_TRUE(v.positive_definite);
  EXPECT_EQ(v.branch, Branch::ReflectedBranch);
  v = classify_binomial(Scalar(0.75), Scalar(-0.5));
  EXPECT_FALSE(v.positive_definite);
  EXPECT_EQ(v.branch, Branch::Outside);
}

TEST(Classify, BoundariesAreInclusive) {
  EXPECT_TRUE(classify_binomial(Scalar(3), Scalar(-1)).positive_definite);
  EXPECT_TRUE(classify_binomial(Scalar(3), Scalar(2)).positive_definite);
  EXPECT_FALSE(classify_binomial(Scalar(3), Scalar(Rational(2000001, 1000000))).positive_definite);
  EXPECT_TRUE(classify_binomial(Scalar(0), Scalar(-1)).positive_definite);
  EXPECT_TRUE(classify_raney(Scalar(2), Scalar(2)).positive_definite);
}

TEST(Classify, RaneyExamples) {
  auto v = classify_raney(Scalar(2), Scalar(1));
  EXPECT_TRUE(v.positive_definite);
  EXPECT_EQ(v.branch, Branch::MainBranch);
  v = classify_raney(Scalar(0.6), Scalar(0));
  EXPECT_TRUE(v.positive_definite);
  EXPECT_EQ(v.branch, Branch::RaneyZero);
  v = classify_raney(Scalar(0.75), Scalar(0.4));
  EXPECT_FALSE(v.positive_definite);
  EXPECT_EQ(v.branch, Branch::Outside);
}

TEST(Classify, NecessaryTwoByTwoConditionHoldsInsideRegion) {
  for (int i = -60; i <= 80; ++i) {
    for (int j = -80; j <= 60; ++j) {
      const Scalar p(Rational(i, 20)), r(Rational(j, 20));
      if (classify_binomial(p, r).positive_definite) ASSERT_GE(hankel2_binomial(p, r), Scalar(0));
      if (classify_raney(p, r).positive_definite) ASSERT_GE(hankel2_raney(p, r), Scalar(0));
    }
  }
}

TEST(Classify, InvariantUnderReflection) {
  for (int i = -60; i <= 80; i += 3) {
    for (int j = -80; j <= 60; j += 3) {
      const Scalar p(Rational(i, 20)), r(Rational(j, 20));
      ASSERT_EQ(classify_binomial(p, r).positive_definite,
                classify_binomial(Scalar(1) - p, Scalar(-1) - r).positive_definite);
      ASSERT_EQ(classify_raney(p, r).positive_definite, classify_raney(Scalar(1) - p, -r).positive_definite);
    }
  }
}

TEST(Classify, FloatInputsUseRationalReconstruction) {
  // 1.3 and 0.3 reconstruct to 13/10 and 3/10, which sit on r = p - 1.
  EXPECT_TRUE(classify_binomial(Scalar(1.3), Scalar(0.3)).positive_definite);
  EXPECT_FALSE(classify_binomial(Scalar(1.3), Scalar(0.31)).positive_definite);
  EXPECT_EQ(classify_binomial(Scalar(2.0), Scalar(1.0)).branch, Branch::MainBranch);
}

TEST(Hankel2, Values) {
  EXPECT_EQ(hankel2_binomial(Scalar(1), Scalar(0)), Scalar(0));
  EXPECT_EQ(hankel2_binomial(Scalar(2), Scalar(1)), Scalar(2));
  // 2(0.81) - 1.8 + 0.5 - 0.25
  EXPECT_EQ(hankel2_binomial(Scalar(Rational(9, 10)), Scalar(Rational(-1, 2))), Scalar(Rational(7, 100)));
  EXPECT_EQ(hankel2_binomial(Scalar(Rational(3, 4)), Scalar(Rational(-1, 2))), Scalar(Rational(-1, 8)));
}

TEST(Hankel2, EqualsTwiceTheDeterminant) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const mpq_class p = oracle::random_rational(rng, 4, 6), r = oracle::random_rational(rng, 4, 6);
    const mpq_class s1 = oracle::binomial_moment(p, r, 1), s2 = oracle::binomial_moment(p, r, 2);
    EXPECT_TRUE(equals(hankel2_binomial(to_scalar(p), to_scalar(r)), 2 * (s2 - s1 * s1)));
  }
}

TEST(Gamma, ClassicalValues) {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  EXPECT_NEAR(gamma_real(0.5), sqrt_pi, 1e-15);
  EXPECT_NEAR(gamma_real(5.0), 24.0, 24.0 * 1e-14);
  EXPECT_NEAR(gamma_real(-0.5), -2.0 * sqrt_pi, 1e-14);
}

TEST(Gamma, RelativeAccuracyAgainstLibm) {
  for (double x = -49.75; x <= 50.0; x += 0.37) {
    if (distance_to_pole(x) < 1e-6) continue;
    const double ref = std::tgamma(x);
    ASSERT_NEAR(gamma_real(x) / ref, 1.0, 1e-13) << x;
  }
}

TEST(Gamma, RecurrenceProperty) {
  for (double x = -19.93; x <= 20.0; x += 0.173) {
    if (distance_to_pole(x) < 1e-6 || distance_to_pole(x + 1) < 1e-6) continue;
    ASSERT_NEAR(gamma_real(x + 1) / (x * gamma_real(x)), 1.0, 1e-12) << x;
  }
}

TEST(Gamma, PolesAreErrors) {
  EXPECT_THROW(gamma_real(0.0), PoleError);
  EXPECT_THROW(gamma_real(-3.0), PoleError);
  EXPECT_THROW(gamma_real(-3.0 + 1e-9), PoleError);
  EXPECT_NO_THROW(gamma_real(-3.0 + 1e-6));
  EXPECT_EQ(reciprocal_gamma(-4.0), 0.0);
  EXPECT_NEAR(reciprocal_gamma(3.0), 0.5, 1e-16);
}
