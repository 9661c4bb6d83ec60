#pragma once

#include <cstdint>

namespace probjam {

// SplitMix64 output function. Used for seeding only.
std::uint64_t splitmix64_mix(std::uint64_t z);

/// xoshiro256** (Blackman & Vigna), state filled from SplitMix64.
///
/// stream(seed, index) gives the generator for trial `index`: the SplitMix64
/// seed is mix(mix(seed) ^ mix(index + 1)), so streams do not depend on how
/// trials are split across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal, Marsaglia polar method (the spare value is cached).
  double normal();

  /// Gamma(shape, 1) for shape >= 1, Marsaglia-Tsang squeeze method.
  double gamma(double shape);

  /// Chi-squared with 2 n degrees of freedom, as 2 Gamma(n, 1).
  double chi_squared_2n(std::uint64_t n);

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace probjam
