#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace lisbon {

// Deterministic splitmix64 generator. Verification sweeps must reproduce
// byte-identical reports for a given seed, so we avoid <random> distributions
// (their output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::complex<double> complex_box(double half_width) {
    double re = uniform(-half_width, half_width);
    double im = uniform(-half_width, half_width);
    return {re, im};
  }

  // Unit-modulus complex number with random phase.
  std::complex<double> unit() {
    double th = uniform(0.0, 6.283185307179586);
    return {std::cos(th), std::sin(th)};
  }

  // Independent stream derived from the current state and a salt. Each sweep
  // item forks its own stream so parallel scheduling cannot reorder draws.
  Rng fork(std::uint64_t salt) const {
    Rng r(state_ ^ (0x632be59bd9b4e019ULL + salt * 0x9e3779b97f4a7c15ULL));
    r.next_u64();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace lisbon
