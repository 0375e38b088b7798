#include "wordrank/random.hpp"

#include <cmath>

namespace wordrank {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += kGolden);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// log(k!) minus its Stirling approximation.
double stirling_tail(double k) {
  static constexpr double kTable[] = {
      0.08106146679532726, 0.04134069595540929, 0.02767792568499834,
      0.02079067210376509, 0.01664469118982119, 0.01387612882307075,
      0.01189670994589177, 0.01041126526197209, 0.009255462182712733,
      0.008330563433362871,
  };
  if (k <= 9) {
    return kTable[static_cast<int>(k)];
  }
  const double kp1sq = (k + 1) * (k + 1);
  return (1.0 / 12 - (1.0 / 360 - 1.0 / 1260 / kp1sq) / kp1sq) / (k + 1);
}

std::uint64_t binomial_inversion(RandomStream& rng, std::uint64_t n, double p) {
  const double log_q = std::log1p(-p);
  const double count = static_cast<double>(n);
  double geom_sum = 0;
  std::uint64_t num_geom = 0;
  while (true) {
    geom_sum += std::ceil(std::log(rng.uniform()) / log_q);
    if (geom_sum > count) {
      return num_geom;
    }
    ++num_geom;
  }
}

std::uint64_t binomial_btrs(RandomStream& rng, std::uint64_t n, double p) {
  const double count = static_cast<double>(n);
  const double spq = std::sqrt(count * p * (1 - p));
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = count * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double r = p / (1 - p);
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double m = std::floor((count + 1) * p);

  while (true) {
    const double u = rng.uniform() - 0.5;
    double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2 * a / us + b) * u + c);
    if (k < 0 || k > count) {
      continue;
    }
    if (us >= 0.07 && v <= v_r) {
      return static_cast<std::uint64_t>(k);
    }
    v = std::log(v * alpha / (a / (us * us) + b));
    const double bound = (m + 0.5) * std::log((m + 1) / (r * (count - m + 1))) +
                         (count + 1) * std::log((count - m + 1) / (count - k + 1)) +
                         (k + 0.5) * std::log(r * (count - k + 1) / (k + 1)) +
                         stirling_tail(m) + stirling_tail(count - m) - stirling_tail(k) -
                         stirling_tail(count - k);
    if (v <= bound) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& s : state_) {
    s = splitmix64(x);
  }
}

RandomStream::result_type RandomStream::operator()() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::uniform() {
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

RandomStream replicate_stream(std::uint64_t seed, std::uint64_t replicate) {
  std::uint64_t x = seed;
  const std::uint64_t a = splitmix64(x);
  std::uint64_t y = replicate ^ rotl(a, 32);
  const std::uint64_t b = splitmix64(y);
  return RandomStream(a ^ rotl(b, 17) ^ (replicate * kGolden));
}

std::uint64_t sample_binomial(RandomStream& rng, std::uint64_t n, double p) {
  if (n == 0 || !(p > 0)) {
    return 0;
  }
  if (p >= 1) {
    return n;
  }
  if (p > 0.5) {
    return n - sample_binomial(rng, n, 1 - p);
  }
  if (static_cast<double>(n) * p < 10) {
    return binomial_inversion(rng, n, p);
  }
  return binomial_btrs(rng, n, p);
}

}  // namespace wordrank
