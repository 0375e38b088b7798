#include "wordrank/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wordrank/errors.hpp"

namespace wordrank {
namespace {

// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double xlogy(double x, double y) { return x == 0 ? 0.0 : x * std::log(y); }

}  // namespace

void ZipfParams::validate() const {
  if (!(a >= 0) || !std::isfinite(a)) {
    throw DomainError("zipf shape a must be finite and >= 0, got " + std::to_string(a));
  }
  if (c < 1) {
    throw DomainError("vocabulary size c must be >= 1");
  }
}

void GrowthParams::validate() const {
  if (!(alpha >= 0) || !std::isfinite(alpha)) {
    throw DomainError("growth rate alpha must be finite and >= 0, got " +
                      std::to_string(alpha));
  }
  if (beta < 1) {
    throw DomainError("initial corpus size beta must be >= 1");
  }
}

std::vector<double> zipf_pmf(const ZipfParams& params) {
  params.validate();
  std::vector<double> pmf(params.c);
  CompensatedSum norm;
  for (std::size_t k = 1; k <= params.c; ++k) {
    pmf[k - 1] = std::pow(static_cast<double>(k), -params.a);
    norm.add(pmf[k - 1]);
  }
  const double z = norm.value();
  for (auto& p : pmf) {
    p /= z;
  }
  return pmf;
}

double zipf_expected_rank(const ZipfParams& params) {
  params.validate();
  CompensatedSum num;
  CompensatedSum den;
  for (std::size_t k = 1; k <= params.c; ++k) {
    const double kd = static_cast<double>(k);
    num.add(std::pow(kd, 1.0 - params.a));
    den.add(std::pow(kd, -params.a));
  }
  return num.value() / den.value();
}

Count corpus_size(std::uint64_t t, const GrowthParams& params) {
  params.validate();
  const double factor = std::ceil(std::exp(params.alpha * static_cast<double>(t)));
  // 2^64 is exactly representable; anything at or above it overflows.
  if (!std::isfinite(factor) || factor >= 0x1.0p64) {
    throw OverflowError("corpus size overflows 64 bits at t=" + std::to_string(t));
  }
  const auto multiplier = static_cast<Count>(factor);
  if (multiplier > std::numeric_limits<Count>::max() / params.beta) {
    throw OverflowError("corpus size overflows 64 bits at t=" + std::to_string(t));
  }
  return params.beta * multiplier;
}

BinomialEnvelope binomial_envelope(double p, Count total, std::size_t vocab) {
  if (!(p >= 0 && p <= 1)) {
    throw DomainError("probability must lie in [0, 1], got " + std::to_string(p));
  }
  if (total < vocab) {
    throw DomainError("token count N=" + std::to_string(total) +
                      " is smaller than vocabulary c=" + std::to_string(vocab));
  }
  const double n = static_cast<double>(total - vocab);
  return {n * p, std::sqrt(n * p * (1 - p))};
}

double log_binomial_pmf(Count r, Count n, double p) {
  if (r > n) {
    throw DomainError("binomial count r=" + std::to_string(r) + " exceeds trials n=" +
                      std::to_string(n));
  }
  if (!(p >= 0 && p <= 1)) {
    throw DomainError("probability must lie in [0, 1], got " + std::to_string(p));
  }
  const double rd = static_cast<double>(r);
  const double nd = static_cast<double>(n);
  if ((p == 0 && r > 0) || (p == 1 && r < n)) {
    return -std::numeric_limits<double>::infinity();
  }
  const double log_choose = std::lgamma(nd + 1) - std::lgamma(rd + 1) - std::lgamma(nd - rd + 1);
  return log_choose + xlogy(rd, p) + xlogy(nd - rd, 1 - p);
}

CountVector sample_multinomial_weighted(std::span<const double> weights, Count total,
                                        RandomStream& rng) {
  const std::size_t c = weights.size();
  if (c == 0) {
    throw DomainError("multinomial needs at least one category");
  }
  if (total < c) {
    throw InfeasibleError("cannot give each of " + std::to_string(c) +
                          " words a token out of N=" + std::to_string(total));
  }
  // Suffix sums make each conditional probability a ratio of exact partial
  // sums instead of a running difference that accumulates rounding error.
  std::vector<double> suffix(c + 1, 0.0);
  for (std::size_t i = c; i-- > 0;) {
    if (!(weights[i] >= 0) || !std::isfinite(weights[i])) {
      throw DomainError("multinomial weights must be finite and non-negative");
    }
    suffix[i] = suffix[i + 1] + weights[i];
  }
  if (!(suffix[0] > 0)) {
    throw DomainError("multinomial weights sum to zero");
  }

  CountVector counts(c, 1);
  Count remaining = total - c;
  for (std::size_t i = 0; i + 1 < c && remaining > 0; ++i) {
    if (suffix[i] <= 0) {
      break;
    }
    const double q = std::min(1.0, weights[i] / suffix[i]);
    const Count draw = sample_binomial(rng, remaining, q);
    counts[i] += draw;
    remaining -= draw;
  }
  if (remaining > 0) {
    // Remaining mass goes to the last category with positive weight.
    std::size_t last = c - 1;
    while (weights[last] <= 0 && last > 0) {
      --last;
    }
    counts[last] += remaining;
  }
  return counts;
}

CountVector sample_multinomial_guarded(std::span<const double> p, Count total,
                                       RandomStream& rng) {
  CompensatedSum sum;
  for (double x : p) {
    sum.add(x);
  }
  if (std::abs(sum.value() - 1.0) > 1e-9) {
    throw DomainError("multinomial probabilities must sum to 1 (got " +
                      std::to_string(sum.value()) + ")");
  }
  return sample_multinomial_weighted(p, total, rng);
}

CountVector zipf_sample_initial(const ZipfParams& zipf, Count beta, RandomStream& rng) {
  const auto pmf = zipf_pmf(zipf);
  return sample_multinomial_guarded(pmf, beta, rng);
}

template <typename T>
std::vector<std::size_t> order_by_descending(std::span<const T> freqs) {
  std::vector<std::size_t> order(freqs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return freqs[i] > freqs[j]; });
  return order;
}

template std::vector<std::size_t> order_by_descending<double>(std::span<const double>);
template std::vector<std::size_t> order_by_descending<Count>(std::span<const Count>);

double sample_mean_rank(std::span<const double> freqs) {
  if (freqs.empty()) {
    throw DomainError("sample mean rank of an empty frequency vector");
  }
  const auto order = order_by_descending(freqs);
  CompensatedSum weighted;
  CompensatedSum total;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double f = freqs[order[k]];
    if (!(f > 0)) {
      throw DomainError("sample mean rank requires strictly positive frequencies");
    }
    weighted.add(static_cast<double>(k + 1) * f);
    total.add(f);
  }
  return weighted.value() / total.value();
}

double sample_mean_rank(std::span<const Count> freqs) {
  std::vector<double> as_real(freqs.begin(), freqs.end());
  return sample_mean_rank(std::span<const double>(as_real));
}

double expected_rank_gap(const ZipfParams& zipf, std::span<const Count> freqs) {
  if (freqs.size() != zipf.c) {
    throw ShapeError("frequency vector has " + std::to_string(freqs.size()) +
                     " entries, vocabulary is " + std::to_string(zipf.c));
  }
  return zipf_expected_rank(zipf) - sample_mean_rank(freqs);
}

}  // namespace wordrank
