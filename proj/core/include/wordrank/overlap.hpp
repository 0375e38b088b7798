#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wordrank/distributions.hpp"

namespace wordrank {

/// Half-width of a binomial envelope, in standard deviations.
inline constexpr double kEnvelopeWidth = 4.0;

struct OverlapReport {
  Count beta = 0;
  std::vector<BinomialEnvelope> envelopes;
  /// Overlapping lower-ranked words minus overlapping higher-ranked words.
  /// Positive values mean the word can only lose ground.
  std::vector<std::int64_t> net_potential;
  std::vector<double> normalized_potential;  // net_potential / c
};

/// Signed length of the intersection of the two mu +/- 4 sigma segments;
/// negative when they are disjoint.
double segment_overlap(const BinomialEnvelope& e1, const BinomialEnvelope& e2);

/// Net potential of envelopes listed by rank (index 0 is rank 1). Counts
/// pairs with strictly positive overlap, in O(c log c) via a sweep over
/// sorted endpoints and two Fenwick trees.
std::vector<std::int64_t> net_potential_of(std::span<const BinomialEnvelope> envelopes);

/// Potential at t = 0 for Zipf probabilities and initial corpus size beta.
OverlapReport net_potential(const ZipfParams& zipf, Count beta);

/// One report per beta value.
std::vector<OverlapReport> potential_profile(const ZipfParams& zipf,
                                             std::span<const Count> beta_values);

}  // namespace wordrank
