#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace wordrank {

/// xoshiro256** generator. Satisfies UniformRandomBitGenerator, so it can
/// also drive the <random> distributions in tests.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double on the open interval (0, 1).
  double uniform();

 private:
  std::array<std::uint64_t, 4> state_;
};

/// Independent stream for one replicate. Streams are derived by hashing
/// (seed, replicate) rather than by slicing one sequence, so replicate r
/// draws the same numbers no matter which thread or order runs it.
RandomStream replicate_stream(std::uint64_t seed, std::uint64_t replicate);

/// Binomial(n, p) variate. O(1) expected time for any n: inversion of
/// geometric waiting times when n*min(p,1-p) < 10, otherwise Hormann's
/// transformed rejection with squeeze (BTRS).
std::uint64_t sample_binomial(RandomStream& rng, std::uint64_t n, double p);

}  // namespace wordrank
