#ifndef UMEB_RANDOM_HPP
#define UMEB_RANDOM_HPP

#include <cstdint>
#include <random>

#include "umeb/types.hpp"

namespace umeb {

inline constexpr std::uint64_t kDefaultRngSeed = 123456789;

/// Deterministic random source. Distributions are hand-rolled on top of
/// mt19937_64 so that streams are reproducible independent of the standard
/// library implementation; sub-streams derived from (master, stream) pairs
/// make per-restart and per-sample draws order-independent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static std::uint64_t mix(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 finalizer over the combined value
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static Rng substream(std::uint64_t master, std::uint64_t stream) {
    return Rng(mix(master, stream));
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Standard complex normal, E|z|^2 = 1.
  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) / std::sqrt(2.0);
  }

  Vector complex_gaussian_vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = complex_gaussian();
    return v;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace umeb

#endif  // UMEB_RANDOM_HPP
