#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wordrank/random.hpp"

namespace wordrank {

using Count = std::uint64_t;
using CountVector = std::vector<Count>;

/// Zipf shape `a` over a vocabulary of `c` ranked words.
struct ZipfParams {
  double a = 1.0;
  std::size_t c = 1;

  void validate() const;
};

/// Exponential corpus growth N(t) = beta * ceil(exp(alpha * t)).
struct GrowthParams {
  double alpha = 0.0;
  Count beta = 1;

  void validate() const;
};

/// Mean and standard deviation of one word's binomial count.
struct BinomialEnvelope {
  double mu = 0.0;
  double sigma = 0.0;

  double lower(double width = 4.0) const { return mu - width * sigma; }
  double upper(double width = 4.0) const { return mu + width * sigma; }
};

/// Zipf probabilities for ranks 1..c, normalized with compensated summation.
std::vector<double> zipf_pmf(const ZipfParams& params);

/// Expected rank of a word drawn from the Zipf distribution.
double zipf_expected_rank(const ZipfParams& params);

/// Corpus size at time step t. The ceiling is taken on the exponential
/// factor alone, before multiplying by beta. Throws OverflowError if the
/// result does not fit in 64 bits.
Count corpus_size(std::uint64_t t, const GrowthParams& params);

/// Marginal of one word when N - c tokens are distributed with probability p.
BinomialEnvelope binomial_envelope(double p, Count total, std::size_t vocab);

/// ln Binomial(r; n, p) with the 0 * ln 0 = 0 convention.
double log_binomial_pmf(Count r, Count n, double p);

/// Gives each of the c words one token, then distributes the remaining
/// N - c tokens multinomially with probabilities `p` using a chain of
/// conditional binomials. O(c) regardless of N.
CountVector sample_multinomial_guarded(std::span<const double> p, Count total,
                                       RandomStream& rng);

/// Same as above with unnormalized non-negative weights; the per-word
/// conditional probability is weight / (sum of this and later weights).
CountVector sample_multinomial_weighted(std::span<const double> weights, Count total,
                                        RandomStream& rng);

/// Initial generation: guarded multinomial with Zipf probabilities.
CountVector zipf_sample_initial(const ZipfParams& zipf, Count beta, RandomStream& rng);

/// Frequency-weighted mean of the ranks the frequencies induce
/// (descending frequency, ties by index): sum_k k * r_(k) / sum r.
double sample_mean_rank(std::span<const double> freqs);
double sample_mean_rank(std::span<const Count> freqs);

/// zipf_expected_rank(zipf) - sample_mean_rank(freqs).
double expected_rank_gap(const ZipfParams& zipf, std::span<const Count> freqs);

/// Indices of `freqs` sorted by descending value, ties by ascending index.
template <typename T>
std::vector<std::size_t> order_by_descending(std::span<const T> freqs);

}  // namespace wordrank
