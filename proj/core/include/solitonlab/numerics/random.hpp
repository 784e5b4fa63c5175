#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace solitonlab::numerics {

// Seeded generator with platform-independent uniform and normal draws.
// std::*_distribution are implementation-defined, so the mapping from raw
// engine output to doubles is spelled out here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Standard normal by Box-Muller (one value per call).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace solitonlab::numerics
