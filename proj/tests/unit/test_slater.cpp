#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <numbers>
#include <vector>

#include "binomoment/binomial.hpp"
#include "binomoment/closedform.hpp"
#include "binomoment/errors.hpp"
#include "binomoment/hypergeometric.hpp"
#include "binomoment/slater.hpp"
#include "binomoment/verify.hpp"
#include "support/oracles.hpp"

using namespace binomoment;

namespace {

constexpr double kPi = std::numbers::pi;

// nu(p, r) through the Slater engine even where a closed form exists.
MeasureModel slater_model(const Params& params) {
  auto e = std::make_shared<const SlaterExpansion>(build_slater(params));
  MeasureModel m;
  m.upper = e->domain_upper;
  m.density = [e](double x, double, double gap) { return eval_V(*e, x, gap); };
  m.moment_fn = [p = Scalar(params.p), r = params.r](long n) { return binom_general(p, r, n); };
  return m;
}

Params pr(long pn, long pd, long rn, long rd) { return Params(Rational(pn, pd), Scalar(Rational(rn, rd))); }

}  // namespace

TEST(BuildSymbol, ThreeHalvesAtZero) {
  const GammaQuotientSymbol s = build_symbol(pr(3, 2, 0, 1));
  EXPECT_EQ(s.k, 3);
  EXPECT_EQ(s.l, 2);
  EXPECT_EQ(s.j_prime, (std::vector<long>{1, 3}));
  ASSERT_EQ(s.alphas_tilde.size(), 3u);
  EXPECT_DOUBLE_EQ(s.alphas_tilde[0], 0.5);
  EXPECT_DOUBLE_EQ(s.alphas_tilde[1], 1.0);
  EXPECT_DOUBLE_EQ(s.alphas_tilde[2], 1.0);
  EXPECT_DOUBLE_EQ(s.betas[0], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.betas[1], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.betas[2], 1.0);
  EXPECT_NEAR(s.scale, std::sqrt(27.0) / 2.0, 1e-15);
}

TEST(BuildSymbol, TwoAtZero) {
  const GammaQuotientSymbol s = build_symbol(pr(2, 1, 0, 1));
  EXPECT_EQ(s.alphas, (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(s.betas, (std::vector<double>{0.5, 1.0}));
}

TEST(BuildSymbol, RejectsPAtMostOne) {
  EXPECT_THROW(build_symbol(pr(1, 1, 0, 1)), RegionError);
  EXPECT_THROW(build_symbol(pr(2, 3, 0, 1)), RegionError);
}

TEST(BuildSymbol, PermutationAndOrderingProperty) {
  for (long k = 2; k <= 9; ++k) {
    for (long l = 1; l < k; ++l) {
      if (std::gcd(k, l) != 1) continue;
      const Rational p(k, l);
      for (int i = 1; i <= 8; ++i) {
        // r runs over (-1, p - 1]
        const Rational r = Rational(-1) + p * Rational(i, 8);
        const GammaQuotientSymbol s = build_symbol(Params(p, Scalar(r)));
        std::vector<double> a = s.alphas, t = s.alphas_tilde;
        std::sort(a.begin(), a.end());
        std::sort(t.begin(), t.end());
        ASSERT_EQ(a, t) << k << '/' << l << ' ' << r.str();
        for (std::size_t j = 0; j < s.betas.size(); ++j) ASSERT_LE(s.betas[j], s.alphas_tilde[j] + 1e-15);
      }
    }
  }
}

TEST(Psi, Examples) {
  EXPECT_NEAR(psi(pr(2, 1, 0, 1), 3.0), 6.0, 1e-13);
  EXPECT_NEAR(psi(pr(2, 1, -1, 1), 1.0), 0.5, 1e-15);
  EXPECT_NEAR(psi(pr(3, 1, 1, 1), 2.0), 4.0, 1e-13);
}

TEST(Psi, IntegerPointsAreBinomials) {
  for (const Params& p : {pr(5, 3, 1, 3), pr(7, 2, 2, 1), pr(3, 2, -1, 2)}) {
    for (long n = 0; n <= 8; ++n) {
      const double b = binom_general(Scalar(p.p), p.r, n).to_double();
      EXPECT_NEAR(psi(p, n + 1.0) / b, 1.0, 1e-12);
    }
  }
}

TEST(Psi, ScalingRelations) {
  for (const Rational& p : {Rational(2), Rational(3), Rational(3, 2), Rational(5, 3), Rational(7, 2)}) {
    const double pv = p.to_double();
    for (double sigma : {1.0, 1.3, 2.0, 2.75, 4.5}) {
      const double base = psi(Params(p, Scalar(0)), sigma);
      EXPECT_NEAR(psi(Params(p, Scalar(-1)), sigma), (pv - 1.0) / pv * base, 1e-12 * std::abs(base));
      const double shifted = psi(Params(p, Scalar(0)), sigma + 1.0);
      EXPECT_NEAR(psi(Params(p, Scalar(p - Rational(1))), sigma), shifted / pv, 1e-12 * std::abs(shifted));
    }
  }
}

TEST(Psi, GenuinePoleThrows) {
  // A = (sigma - 1) 2 + 1 vanishes at sigma = 1/2 while B = (sigma - 1) + 1 does not.
  EXPECT_THROW(psi(pr(2, 1, 0, 1), 0.5), PoleError);
}

TEST(Pfq, EmptySumAtZero) {
  const double a[] = {0.3, 1.7}, b[] = {2.5};
  const PfqResult res = pfq(a, b, 0.0);
  EXPECT_EQ(res.value, 1.0);
  EXPECT_TRUE(res.converged);
}

TEST(Pfq, ArcsineIdentity) {
  const double a[] = {0.5, 0.5}, b[] = {1.5};
  EXPECT_NEAR(pfq(a, b, 0.25).value, std::asin(0.5) / 0.5, 1e-15);
}

TEST(Pfq, QuadraticTransformationFamily) {
  const double t = 1.0 / 3.0, z = 0.5;
  const double a[] = {t / 2.0, (t + 1.0) / 2.0}, b[] = {t};
  const double s = std::sqrt(1.0 - z);
  const double expected = std::pow(1.0 + s, 1.0 - t) / (std::pow(2.0, 1.0 - t) * s);
  EXPECT_NEAR(pfq(a, b, z).value, expected, 1e-14);
}

TEST(Pfq, NegativeArgumentAndTailMonitor) {
  const double a[] = {1.0, 1.0}, b[] = {2.0};
  // 2F1(1,1;2;z) = -log(1-z)/z
  for (double z : {-0.9, -0.3, 0.6, 0.95}) {
    const PfqResult res = pfq(a, b, z);
    EXPECT_NEAR(res.value, -std::log1p(-z) / z, 1e-13) << z;
    EXPECT_TRUE(res.converged);
    EXPECT_FALSE(res.precision_loss);
  }
}

TEST(Pfq, BadParametersRejected) {
  const double a[] = {0.5}, bad_b[] = {-2.0}, b[] = {1.5};
  EXPECT_THROW(pfq(a, bad_b, 0.1), DomainError);
  EXPECT_THROW(pfq(a, b, 1.0), DomainError);
  const PfqResult capped = pfq(a, b, 0.999999, 10);
  EXPECT_FALSE(capped.converged);
  EXPECT_TRUE(capped.precision_loss);
}

TEST(BuildSlater, VanishingCoefficients) {
  const SlaterExpansion p3r0 = build_slater(pr(3, 1, 0, 1));
  ASSERT_EQ(p3r0.terms.size(), 3u);
  // alpha~ contains 1 = beta_3, so c_3 has a denominator pole.
  EXPECT_EQ(p3r0.terms[2].c, 0.0);
  EXPECT_NE(p3r0.terms[0].c, 0.0);
  const SlaterExpansion p3r1 = build_slater(pr(3, 1, 1, 1));
  EXPECT_EQ(p3r1.terms[1].c, 0.0);
  const SlaterExpansion p32r0 = build_slater(pr(3, 2, 0, 1));
  EXPECT_EQ(p32r0.terms[2].c, 0.0);
}

TEST(BuildSlater, StructuralInvariants) {
  for (const Params& p : {pr(5, 3, 1, 3), pr(7, 2, 2, 1), pr(7, 3, -1, 2), pr(9, 4, 0, 1)}) {
    const SlaterExpansion e = build_slater(p);
    ASSERT_EQ(static_cast<long>(e.terms.size()), e.k);
    for (long h = 1; h <= e.k; ++h) {
      const SlaterTerm& t = e.terms[h - 1];
      EXPECT_EQ(static_cast<long>(t.a.size()), e.k);
      ASSERT_EQ(static_cast<long>(t.b.size()), e.k - 1);
      long idx = 0;
      for (long j = 1; j <= e.k; ++j) {
        if (j == h) continue;
        EXPECT_NEAR(t.b[idx], static_cast<double>(e.k + h - j) / e.k, 1e-15);
        EXPECT_FALSE(t.b[idx] <= 0.0 && t.b[idx] == std::floor(t.b[idx]));
        ++idx;
      }
      EXPECT_NEAR(t.exponent, (p.r_value() + h) / e.k - 1.0 / e.l, 1e-15);
    }
    EXPECT_NEAR(e.z_scale, std::pow(e.domain_upper, static_cast<double>(e.l)), 1e-12 * e.z_scale);
  }
}

TEST(EvalV, ArcsineAtMidpoint) {
  const SlaterExpansion e = build_slater(pr(2, 1, 0, 1));
  EXPECT_NEAR(eval_V(e, 2.0), 1.0 / (2.0 * kPi), 1e-15);
  for (double x : {0.01, 0.5, 3.0, 3.99}) EXPECT_NEAR(eval_V(e, x) / oracle::arcsine_density(x), 1.0, 1e-12);
}

TEST(EvalV, MatchesElementaryPThree) {
  const SlaterExpansion e = build_slater(pr(3, 1, 0, 1));
  EXPECT_NEAR(eval_V(e, 1.0), eval_closed({ClosedFormKind::V3, 0.0}, 1.0), 1e-9);
}

TEST(EvalV, NegativeValuesOutsideRegion) {
  const SlaterExpansion e = build_slater(pr(3, 2, 1, 1));
  double lowest = 0.0;
  for (int i = 1; i < 400; ++i) lowest = std::min(lowest, eval_V(e, e.domain_upper * i / 400.0));
  EXPECT_LT(lowest, -1e-3);
}

TEST(EvalV, DomainAndEndpointBehaviour) {
  const SlaterExpansion e = build_slater(pr(5, 3, 1, 3));
  EXPECT_THROW(eval_V(e, 0.0), DomainError);
  EXPECT_THROW(eval_V(e, e.domain_upper), DomainError);
  EXPECT_THROW(eval_V(e, -1.0), DomainError);
  const VEvaluation near_end = eval_V_detailed(e, e.domain_upper - 1e-12, 1e-12);
  EXPECT_TRUE(near_end.endpoint_continued);
  EXPECT_TRUE(std::isfinite(near_end.value));
  EXPECT_GT(near_end.value, 0.0);
  // sqrt(c - x) V tends to a finite limit.
  const double a = std::sqrt(1e-10) * eval_V(e, e.domain_upper - 1e-10, 1e-10);
  const double b = std::sqrt(1e-12) * eval_V(e, e.domain_upper - 1e-12, 1e-12);
  EXPECT_NEAR(a / b, 1.0, 1e-4);
}

TEST(EvalV, MellinTransformIsPsi) {
  const Params cases[] = {pr(2, 1, 0, 1),  pr(2, 1, 1, 2), pr(3, 1, 1, 1),  pr(3, 1, -1, 2),
                          pr(3, 2, 0, 1),  pr(3, 2, 1, 4), pr(5, 3, 1, 3),  pr(5, 3, -1, 3)};
  for (const Params& p : cases) {
    const MeasureModel m = slater_model(p);
    for (double sigma : {1.0, 1.5, 2.0, 3.25}) {
      const double expected = psi(p, sigma);
      const double got = integrate_density_power(m, sigma - 1.0).value;
      EXPECT_NEAR(got, expected, 1e-7 * std::max(1.0, std::abs(expected)))
          << p.p.str() << ' ' << p.r.str() << ' ' << sigma;
    }
  }
}

TEST(EvalV, MomentsAreBinomials) {
  const Params cases[] = {pr(3, 1, 0, 1), pr(5, 3, 1, 3), pr(7, 2, 2, 1), pr(7, 3, -1, 2), pr(5, 2, 3, 2)};
  for (const Params& p : cases) {
    const MeasureModel m = slater_model(p);
    for (long n = 0; n <= 10; ++n) {
      const double expected = oracle::binomial_moment(p.p.mpq(), p.r.exact().mpq(), n).get_d();
      const double got = integrate_density(m, n).value;
      EXPECT_NEAR(got / expected, 1.0, 1e-8) << p.p.str() << ' ' << p.r.str() << ' ' << n;
    }
  }
}

TEST(EvalV, MinusOneDensityIsScaledZeroDensity) {
  // The Mellin symbol at r = -1 is ((p-1)/p) times the one at r = 0.
  const SlaterExpansion a = build_slater(pr(5, 3, -1, 1));
  const SlaterExpansion b = build_slater(pr(5, 3, 0, 1));
  for (double t : {0.05, 0.3, 0.7, 0.95}) {
    const double x = t * a.domain_upper;
    EXPECT_NEAR(eval_V(a, x), 0.4 * eval_V(b, x), 1e-12 * eval_V(b, x));
  }
}

TEST(RaneyDensity, MarchenkoPastur) {
  const RaneyDensity w(pr(2, 1, 1, 1));
  EXPECT_NEAR(w(2.0), 1.0 / (2.0 * kPi), 1e-12);
  for (double x : {0.01, 0.7, 1.9, 3.5, 3.999}) EXPECT_NEAR(w(x) / oracle::marchenko_pastur_density(x), 1.0, 1e-9);
  EXPECT_NEAR(raney_density_W(pr(2, 1, 1, 1), 2.0), 1.0 / (2.0 * kPi), 1e-12);
}

TEST(RaneyDensity, CatalanMoments) {
  const auto w = std::make_shared<const RaneyDensity>(pr(2, 1, 1, 1));
  MeasureModel m;
  m.upper = 4.0;
  m.density = [w](double x, double, double gap) { return (*w)(x, gap); };
  QuadratureSpec spec;
  spec.target_abs_tol = 1e-9;
  for (long n = 0; n <= 6; ++n) {
    EXPECT_NEAR(integrate_density(m, n, spec).value, oracle::fuss(2, n).get_d(), 1e-7 * std::max(1.0, oracle::fuss(2, n).get_d()));
  }
}

TEST(RaneyDensity, GenericCaseHasUnitMassAndRaneyMoments) {
  for (const Params& p : {pr(3, 1, 1, 1), pr(5, 2, 3, 2)}) {
    const auto w = std::make_shared<const RaneyDensity>(p);
    MeasureModel m;
    m.upper = w->upper();
    m.density = [w](double x, double, double gap) { return (*w)(x, gap); };
    QuadratureSpec spec;
    spec.target_abs_tol = 1e-9;
    for (long n = 0; n <= 4; ++n) {
      const double expected = oracle::raney_moment(p.p.mpq(), p.r.exact().mpq(), n).get_d();
      EXPECT_NEAR(integrate_density(m, n, spec).value / expected, 1.0, 1e-7) << p.p.str() << ' ' << n;
    }
  }
}

TEST(RaneyDensity, RejectsOutOfRangeR) {
  EXPECT_THROW(RaneyDensity(pr(2, 1, 0, 1)), RegionError);
  EXPECT_THROW(RaneyDensity(pr(2, 1, 5, 2)), RegionError);
}
