#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "wordrank/distributions.hpp"
#include "wordrank/frequency_matrix.hpp"
#include "wordrank/metrics.hpp"
#include "wordrank/parallel.hpp"
#include "wordrank/random.hpp"

namespace wordrank {

struct SimulationConfig {
  double alpha = 0.01;
  Count beta = 100'000;
  std::size_t vocab = 1000;
  double zipf_a = 1.0;
  std::size_t steps = 109;
  std::uint64_t seed = 0;
  std::size_t replicates = 100;

  /// Throws DomainError for bad parameters and OverflowError if the final
  /// corpus size does not fit in 64 bits.
  void validate() const;

  GrowthParams growth() const { return {alpha, beta}; }
  ZipfParams zipf() const { return {zipf_a, vocab}; }
};

struct ZScores {
  RealGrid values;
  /// Rows with zero variance; they are emitted as all zeros.
  std::vector<bool> constant_rows;
};

struct Trajectory {
  FrequencyMatrix frequencies;
  RealGrid proportions;
  ZScores zscores;
  RankMatrix ranks;
};

/// One generation: each word keeps one token and the remaining
/// n_next - c tokens are drawn with the previous proportions.
CountVector step(std::span<const Count> prev, Count n_next, RandomStream& rng);

/// Counts of one replicate; a pure function of (config, replicate).
FrequencyMatrix simulate_counts(const SimulationConfig& config, std::size_t replicate);

/// Proportions, z-scores and ranks of a count matrix.
Trajectory make_trajectory(FrequencyMatrix freqs);

Trajectory simulate(const SimulationConfig& config, std::size_t replicate);

/// Runs fn(replicate, counts) for every replicate, possibly concurrently,
/// and returns the results in replicate order.
template <typename Fn>
auto map_replicates(const SimulationConfig& config, Fn&& fn, unsigned threads = 0)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t, FrequencyMatrix&&>> {
  config.validate();
  std::vector<std::invoke_result_t<Fn&, std::size_t, FrequencyMatrix&&>> results(
      config.replicates);
  parallel_for(config.replicates, threads, [&](std::size_t r) {
    results[r] = fn(r, simulate_counts(config, r));
  });
  return results;
}

std::vector<Trajectory> ensemble(const SimulationConfig& config, unsigned threads = 0);

/// Column-normalized counts.
RealGrid normalize_proportions(const FrequencyMatrix& freqs);

/// Row-wise z-scores with population (1/T) variance.
ZScores normalize_zscores(const RealGrid& props);

}  // namespace wordrank
