#pragma once

// Deterministic random number generation: splitmix64-seeded xoshiro256++
// with Box-Muller Gaussians. Every constant is pinned here so identical
// (seed, stream) pairs reproduce identical values on any platform.

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace cohbound {

// Identifies one deterministic sample stream.
struct SeedSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256++ 1.0. State is filled from a splitmix64 run whose seed is the
// effective seed splitmix64(seed XOR stream), so distinct streams give
// independent sequences that can be sampled in parallel.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(const SeedSpec& spec) {
    const std::uint64_t effective = SplitMix64(spec.seed ^ spec.stream).next();
    SplitMix64 sm(effective);
    for (auto& word : state_) word = sm.next();
  }

  std::uint64_t next() {
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

  // Uniform double in (0, 1]; never zero, so it is safe under log.
  double next_unit_positive() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform double in [0, 1).
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // One Box-Muller pair of independent standard normal deviates.
  std::pair<double, double> next_gaussian_pair() {
    const double u1 = next_unit_positive();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace cohbound
