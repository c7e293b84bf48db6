// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "qcs/types.hpp"

namespace qcs {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
} // namespace detail

/// Deterministic xoshiro256++ generator with explicit distributions, so that
/// results are reproducible across platforms and standard library versions.
/// Independent streams are derived by hashing (seed, key...) tuples, which
/// makes Monte-Carlo trials order-independent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = detail::splitmix64(sm);
  }

  /// Stream derived from a master seed and a tuple of keys (counter-based
  /// splitting): same inputs give the same stream regardless of call order.
  static Rng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t sm = seed;
    std::uint64_t acc = detail::splitmix64(sm);
    for (std::uint64_t k : keys) {
      sm = acc ^ (k + 0x9e3779b97f4a7c15ULL);
      acc = detail::splitmix64(sm);
    }
    return Rng(acc);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; caches the second deviate.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  /// Zero-mean Laplacian with the given standard deviation.
  double laplace(double stddev) {
    const double b = stddev / std::sqrt(2.0);
    const double u = uniform() - 0.5;
    const double mag = -b * std::log(1.0 - 2.0 * std::abs(u));
    return u >= 0.0 ? mag : -mag;
  }

  /// Circularly-symmetric complex Gaussian CN(0, variance).
  cd cgauss(double variance) {
    const double s = std::sqrt(variance / 2.0);
    return {s * normal(), s * normal()};
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4] = {};
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace qcs
