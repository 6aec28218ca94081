// Acceptance suite: one pass/fail line per criterion.
//   acceptance                 runs every criterion
//   acceptance --criterion N   runs criterion N only (1..9)
// The exit status is 0 only when every criterion run passed within its time limit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "binomoment/binomial.hpp"
#include "binomoment/classify.hpp"
#include "binomoment/closedform.hpp"
#include "binomoment/freeconv.hpp"
#include "binomoment/generating.hpp"
#include "binomoment/mellin.hpp"
#include "binomoment/slater.hpp"
#include "binomoment/verify.hpp"
#include "cli.hpp"
#include "support/oracles.hpp"

using namespace binomoment;

namespace {

struct Verdict {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  double limit_seconds;
  std::function<Verdict()> run;
};

Params exact(const Rational& p, const Rational& r) { return Params(p, Scalar(r)); }

std::string run_cli(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = cli::run(args, out, err);
  return out.str();
}

// 1. d_series_from_b equals binom_general exactly, coefficients 0..30.
Verdict exact_series_identity() {
  const Rational ps[] = {Rational(2), Rational(3), Rational(3, 2), Rational(5, 3), Rational(7, 2)};
  const Rational rs[] = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 3), Rational(2)};
  int checked = 0;
  for (const Rational& p : ps) {
    for (const Rational& r : rs) {
      const TruncatedSeries d = d_series_from_b(Scalar(p), Scalar(r), 30);
      if (!d.is_exact() || d.order() != 30) return {false, "non-exact or short series at p=" + p.str()};
      for (long n = 0; n <= 30; ++n) {
        const Scalar b = binom_general(Scalar(p), Scalar(r), n);
        const mpq_class oracle_value = oracle::binomial_moment(p.mpq(), r.mpq(), n);
        if (!(d[n] == b) || b.exact().mpq() != oracle_value) {
          return {false, "mismatch at p=" + p.str() + " r=" + r.str() + " n=" + std::to_string(n)};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " coefficients equal exactly"};
}

// 2. B = 1 + z B^p exactly at N = 30 for 20 random rational p.
Verdict functional_equation() {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    const Rational p(oracle::random_rational(rng, 4, 7));
    if (!check_b_functional_equation(Scalar(p), 30)) return {false, "fails at p=" + p.str()};
  }
  return {true, "20 random p, N=30, exact"};
}

// 3. Closed forms against the Slater expansion on eleven grids.
Verdict closed_vs_slater() {
  struct Case {
    Rational p, r;
    ClosedFormId id;
  };
  const std::vector<Case> cases = {
      {Rational(2), Rational(-1), {ClosedFormKind::V2, -1.0}},
      {Rational(2), Rational(-1, 2), {ClosedFormKind::V2, -0.5}},
      {Rational(2), Rational(0), {ClosedFormKind::V2, 0.0}},
      {Rational(2), Rational(1, 2), {ClosedFormKind::V2, 0.5}},
      {Rational(2), Rational(1), {ClosedFormKind::V2, 1.0}},
      {Rational(3), Rational(0), {ClosedFormKind::V3, 0.0}},
      {Rational(3), Rational(1), {ClosedFormKind::V3, 1.0}},
      {Rational(3), Rational(2), {ClosedFormKind::V3, 2.0}},
      {Rational(3, 2), Rational(-1, 2), {ClosedFormKind::V32, -0.5}},
      {Rational(3, 2), Rational(0), {ClosedFormKind::V32, 0.0}},
      {Rational(3, 2), Rational(1, 2), {ClosedFormKind::V32, 0.5}},
  };
  double worst = 0.0;
  std::string where;
  for (const Case& c : cases) {
    const SlaterExpansion e = build_slater(exact(c.p, c.r));
    const double upper = closed_form_upper(c.id);
    for (int i = 0; i < 200; ++i) {
      const double x = upper * (0.02 + 0.96 * i / 199.0);
      const double diff = std::abs(eval_closed(c.id, x) - eval_V(e, x));
      if (!(diff <= worst)) {
        worst = diff;
        where = "p=" + c.p.str() + " r=" + c.r.str() + " x=" + format_double(x);
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |closed - slater| = %.3g over 11 grids", worst);
  return {worst <= 1e-9, std::string(buf) + (worst <= 1e-9 ? "" : " at " + where)};
}

// 4. Moments of the density model reproduce binom(np + r, n), n <= 10, rel 1e-7.
Verdict moment_certification() {
  struct Case {
    Rational p, r;
    double atom;
  };
  const std::vector<Case> cases = {
      {Rational(2), Rational(0), 0.0},          {Rational(2), Rational(1), 0.0},
      {Rational(3), Rational(0), 0.0},          {Rational(3), Rational(2), 0.0},
      {Rational(3, 2), Rational(-1, 2), 0.0},   {Rational(5, 3), Rational(1, 3), 0.0},
      {Rational(7, 2), Rational(2), 0.0},       {Rational(3), Rational(-1), 1.0 / 3.0},
      {Rational(3, 2), Rational(-1), 2.0 / 3.0},
  };
  double worst = 0.0;
  for (const Case& c : cases) {
    const CertifyReport rep = certify_measure(exact(c.p, c.r), 10, 1e-7);
    if (!rep.passed) return {false, "certify fails at p=" + c.p.str() + " r=" + c.r.str()};
    if (std::abs(rep.atom - c.atom) > 1e-15) return {false, "wrong atom at p=" + c.p.str() + " r=" + c.r.str()};
    for (const MomentCheck& m : rep.moments) worst = std::max(worst, m.error / std::max(1.0, std::abs(m.expected)));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "9 cases, n<=10, worst relative error %.3g (tol 1e-7), atoms 1/3 and 2/3", worst);
  return {true, buf};
}

// 5. Mellin products and the sampler.
Verdict mellin_factorization() {
  int pairs = 0;
  double worst = 0.0;
  for (const Rational& p : {Rational(2), Rational(3), Rational(3, 2), Rational(5, 3), Rational(7, 2), Rational(9, 4)}) {
    for (long i = 1; i <= 5; ++i) {
      const Rational r = Rational(-1) + p * Rational(i, 5);
      const MellinFactorization f = factorize(exact(p, r));
      for (long n = 0; n <= 12; ++n) {
        const double expected = oracle::binomial_moment(p.mpq(), r.mpq(), n).get_d();
        worst = std::max(worst, std::abs(mellin_product_moments(f, n) / expected - 1.0));
      }
      ++pairs;
    }
  }
  if (worst > 1e-10) return {false, "product moments off by " + format_double(worst)};
  double worst_se = 0.0;
  for (const Rational& p : {Rational(2), Rational(3)}) {
    const MellinFactorization f = factorize(exact(p, Rational(0)));
    const std::vector<double> x = sample(f, 1'000'000, 7);
    for (int n = 1; n <= 5; ++n) {
      double sum = 0.0;
      for (double v : x) sum += std::pow(v, n);
      const double mean = sum / static_cast<double>(x.size());
      const double sn = oracle::binomial_moment(p.mpq(), 0, n).get_d();
      const double s2n = oracle::binomial_moment(p.mpq(), 0, 2 * n).get_d();
      const double se = std::sqrt((s2n - sn * sn) / static_cast<double>(x.size()));
      worst_se = std::max(worst_se, std::abs(mean - sn) / se);
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d pairs, worst product error %.3g (tol 1e-10); sampler worst %.2f SE (limit 5)", pairs,
                worst, worst_se);
  return {worst_se <= 5.0, buf};
}

// 6. The convolution identity suite at 12 moments.
Verdict convolution_identities() {
  std::string failed;
  int total = 0;
  for (const IdentityCheck& c : run_identity_suite(12)) {
    ++total;
    if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.id + " [" + c.statement + "]";
  }
  if (failed.empty()) return {true, std::to_string(total) + " identities hold"};
  return {false, "failing: " + failed};
}

// 7. Classification against the literal inequalities, plus witnesses.
Verdict classification() {
  for (int i = 0; i <= 140; ++i) {
    for (int j = 0; j <= 140; ++j) {
      const mpq_class p = oracle::q(-60 + i, 20), r = oracle::q(-80 + j, 20);
      const Scalar ps(Rational{p}), rs(Rational{r});
      if (classify_binomial(ps, rs).positive_definite != oracle::binomial_region(p, r) ||
          classify_raney(ps, rs).positive_definite != oracle::raney_region(p, r)) {
        return {false, "grid mismatch at p=" + p.get_str() + " r=" + r.get_str()};
      }
    }
  }
  const std::vector<std::pair<Rational, Rational>> outside = {
      {Rational(3, 2), Rational(1)},     {Rational(2), Rational(3, 2)},   {Rational(3), Rational(-3, 2)},
      {Rational(3, 2), Rational(-5, 4)}, {Rational(5, 2), Rational(-3, 2)}, {Rational(7, 2), Rational(4)},
      {Rational(5, 3), Rational(1)},     {Rational(3), Rational(5, 2)},   {Rational(2), Rational(-3, 2)},
      {Rational(4), Rational(7, 2)},
  };
  const std::vector<std::pair<Rational, Rational>> inside = {
      {Rational(2), Rational(0)},      {Rational(2), Rational(1)},      {Rational(3), Rational(-1, 2)},
      {Rational(3), Rational(2)},      {Rational(3, 2), Rational(-1, 2)}, {Rational(5, 3), Rational(1, 3)},
      {Rational(7, 2), Rational(2)},   {Rational(5, 2), Rational(1)},   {Rational(4), Rational(3)},
      {Rational(7, 3), Rational(1, 2)},
  };
  for (const auto& [p, r] : outside) {
    if (oracle::binomial_region(p.mpq(), r.mpq())) return {false, "test pair inside region: " + p.str()};
    try {
      find_negativity_witness(exact(p, r));
    } catch (const std::exception& e) {
      return {false, "no witness at p=" + p.str() + " r=" + r.str() + ": " + e.what()};
    }
  }
  for (const auto& [p, r] : inside) {
    if (search_negativity_witness(exact(p, r)).has_value()) {
      return {false, "spurious witness at p=" + p.str() + " r=" + r.str()};
    }
  }
  return {true, "141x141 grid matches (binomial and Raney); 10/10 witnesses outside, 0/10 inside"};
}

// 8. OEIS prefixes through the moments command.
Verdict oeis() {
  struct Case {
    const char* name;
    const char* p;
    const char* r;
    const char* expected;
  };
  const Case cases[] = {
      {"A000984", "2", "0", "1 2 6 20 70 252 924 3432"},
      {"A165817", "3", "-1", "1 2 10 56 330 2002 12376 77520"},
      {"A005809", "3", "0", "1 3 15 84 495 3003 18564 116280"},
      {"A045721", "3", "1", "1 4 21 120 715 4368 27132 170544"},
      {"A025174", "3", "2", "1 5 28 165 1001 6188 38760 245157"},
  };
  for (const Case& c : cases) {
    int code = 0;
    const std::string out = run_cli({"moments", "--p", c.p, "--r", c.r, "--n", "7"}, &code);
    if (code != 0 || out != std::string(c.expected) + "\n") return {false, std::string(c.name) + " got " + out};
  }
  int code = 0;
  const std::string a091527 = run_cli({"moments", "--p", "3/2", "--r", "-1/2", "--n", "14", "--scale", "4"}, &code);
  if (code != 0 || a091527.rfind("1 4 30 256 2310 21504 204204 ", 0) != 0) return {false, "A091527 got " + a091527};
  std::istringstream in(a091527);
  std::vector<mpz_class> terms;
  for (std::string t; in >> t;) terms.emplace_back(t);
  for (long n = 0; 2 * n < static_cast<long>(terms.size()); ++n) {
    if (terms[2 * n] != oracle::a061162(n)) return {false, "A061162 mismatch at n=" + std::to_string(n)};
  }
  return {true, "5 binomial prefixes, A091527 and A061162(n) = A091527(2n) for n<=7, exact"};
}

// 9. Reflection (p, r) -> (1 - p, -1 - r) twists moments by (-1)^n.
Verdict reflection() {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    const Rational p(oracle::random_rational(rng, 5, 9)), r(oracle::random_rational(rng, 5, 9));
    const std::vector<Scalar> a = binomial_moments(Scalar(p), Scalar(r), 30);
    const std::vector<Scalar> b = binomial_moments(Scalar(Rational(1) - p), Scalar(Rational(-1) - r), 30);
    for (long n = 0; n <= 30; ++n) {
      if (!(b[n] == (n % 2 == 0 ? a[n] : -a[n]))) return {false, "p=" + p.str() + " r=" + r.str()};
    }
  }
  return {true, "20 random exact pairs, n<=30"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, 10.0, exact_series_identity},  {2, 5.0, functional_equation}, {3, 30.0, closed_vs_slater},
      {4, 120.0, moment_certification},  {5, 60.0, mellin_factorization}, {6, 10.0, convolution_identities},
      {7, 120.0, classification},        {8, 1.0, oeis},                 {9, 1.0, reflection},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 64;
    }
  }
  if (only < 0 || only > 9) {
    std::fprintf(stderr, "criterion must be 1..9\n");
    return 64;
  }
  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed <= c.limit_seconds;
    const bool passed = v.passed && in_time;
    std::printf("criterion %d: %s %s [%.2f s / %.0f s%s]\n", c.id, passed ? "PASS" : "FAIL", v.detail.c_str(), elapsed,
                c.limit_seconds, in_time ? "" : ", over time");
    all = all && passed;
  }
  return all ? 0 : 1;
}
