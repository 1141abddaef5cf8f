// Shared helpers for the test suites.
#pragma once

#include <cmath>
#include <random>

#include <kepler/vec3.hpp>

namespace kepler::test {

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::abs(b);
}

inline double rel_diff(const Vec3& a, const Vec3& b) {
  return norm(a - b) / norm(b);
}

// Deterministic generator for property-style tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  Vec3 vec(double lo, double hi) {
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
  }

  // Nonzero vector away from the origin.
  Vec3 position(double lo = 0.3, double hi = 3.0) {
    Vec3 v = vec(-hi, hi);
    while (norm(v) < lo) {
      v = vec(-hi, hi);
    }
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kepler::test
