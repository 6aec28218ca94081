#include <cmath>
#include <numbers>
#include <random>

#include "binomoment/mellin.hpp"
#include "binomoment/parallel.hpp"

namespace binomoment {

namespace {

constexpr std::size_t kBlockSize = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Distributions are written out here rather than taken from <random>, whose
// algorithms are implementation-defined; mt19937_64 itself is fully specified.
class Source {
 public:
  explicit Source(std::uint64_t seed) : engine_(seed) {}

  // Uniform on the open interval (0, 1).
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  double normal() {
    const double u1 = uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // log of a Gamma(shape, 1) variate (Marsaglia-Tsang); shapes below 1 use
  // Gamma(a) = Gamma(a + 1) U^(1/a).
  double log_gamma_variate(double shape) {
    if (shape < 1.0) return log_gamma_variate(shape + 1.0) + std::log(uniform()) / shape;
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return std::log(d) + std::log(v);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// log of Beta(u, v) from two gamma variates: B = X / (X + Y).
double log_beta_variate(Source& src, double u, double v) {
  const double lx = src.log_gamma_variate(u);
  const double ly = src.log_gamma_variate(v);
  const double d = ly - lx;
  return d > 0 ? -d - std::log1p(std::exp(-d)) : -std::log1p(std::exp(d));
}

}  // namespace

std::vector<double> sample(const MellinFactorization& f, std::size_t count, std::uint64_t seed) {
  std::vector<double> out(count, f.dilation);
  const std::size_t blocks = (count + kBlockSize - 1) / kBlockSize;
  parallel_for(blocks, [&](std::size_t block) {
    Source src(splitmix64(seed + block));
    const std::size_t begin = block * kBlockSize;
    const std::size_t end = std::min(count, begin + kBlockSize);
    for (std::size_t i = begin; i < end; ++i) {
      double log_value = 0.0;
      for (const auto& factor : f.factors) {
        if (factor.is_point_mass()) continue;
        log_value += log_beta_variate(src, factor.u, factor.v) / static_cast<double>(factor.l);
      }
      out[i] = f.dilation * std::exp(log_value);
    }
  });
  return out;
}

}  // namespace binomoment
