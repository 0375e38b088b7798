#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wordrank/calibration.hpp"
#include "wordrank/frequency_matrix.hpp"
#include "wordrank/grid.hpp"

namespace wordrank {

using Rank = std::uint32_t;
using WordId = std::uint32_t;
using Ordering = std::vector<WordId>;

/// Unique integer ranks (1 = most frequent); each column is a permutation of 1..c.
struct RankMatrix {
  Grid<Rank> ranks;
  std::vector<std::string> words;

  std::size_t vocab() const { return ranks.rows(); }
  std::size_t steps() const { return ranks.cols(); }

  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;
};

/// Per time step, word ids ordered by ascending rank.
struct RankedList {
  std::vector<Ordering> lists;
  std::vector<std::string> words;

  std::size_t steps() const { return lists.size(); }
  std::size_t vocab() const { return words.size(); }

  friend bool operator==(const RankedList&, const RankedList&) = default;
};

struct RankChangeSummary {
  std::vector<std::int64_t> sum;
  std::vector<double> normalized_sum;       // sum / c
  std::vector<double> variance;             // population variance of the T-1 steps
  std::vector<double> normalized_variance;  // variance / max variance, 0 if all constant
};

struct RboParams {
  /// Persistence: p = 1 weighs every depth equally.
  double p = 1.0;

  void validate() const;
};

/// Ranks from one column of counts: descending count, ties broken by
/// ascending word text (byte order, i.e. code point order for UTF-8).
std::vector<Rank> assign_ranks(std::span<const Count> freq_column,
                               std::span<const std::string> words);

/// Same, with ties broken by ascending index.
std::vector<Rank> assign_ranks(std::span<const Count> freq_column);

RankMatrix rank_matrix(const FrequencyMatrix& freqs);

/// Inverse permutation of every column. Throws IntegrityError if a column
/// is not a permutation of 1..c.
RankedList ranked_list(const RankMatrix& ranks);

/// Inverse of ranked_list.
RankMatrix rank_matrix(const RankedList& lists);

/// Sum and population variance of the per-step rank differences
/// K_t - K_{t-1}. Negative sums mean the word moved towards rank 1.
RankChangeSummary rank_change_summary(const RankMatrix& ranks);

/// |S[:d] ∩ T[:d]| / d.
double agreement(std::span<const WordId> s, std::span<const WordId> t, std::size_t depth);

/// Rank-biased overlap of two orderings of the same word set, truncated at
/// the list length. For p = 1 this is the mean agreement over depths 1..c;
/// otherwise (1-p) * sum_d p^(d-1) A_d.
double rbo(std::span<const WordId> s, std::span<const WordId> t, const RboParams& params = {});

struct RboComparison {
  enum class Kind { lagged, from_initial };
  Kind kind = Kind::lagged;
  std::size_t lag = 1;

  static RboComparison lagged(std::size_t lag) { return {Kind::lagged, lag}; }
  static RboComparison from_initial() { return {Kind::from_initial, 0}; }
};

/// lagged(L): rbo(RL_t, RL_{t+L}) for t = 0..T-1-L.
/// from_initial: rbo(RL_0, RL_t) for t = 0..T-1.
std::vector<double> rbo_curve(const RankedList& lists, RboComparison comparison,
                              const RboParams& params = {});

/// Turnover exponent reported for unbiased copying.
inline constexpr double kUnbiasedCopyingExponent = 0.86;

enum class TurnoverShape { anti_conformity, linear, conformity };

/// b > 1 conformity, b < 1 anti-conformity.
TurnoverShape classify_turnover(double b);
const char* to_string(TurnoverShape shape);

/// z(y) for y = 1..y_max: new words entering the top-y list per step,
/// averaged over the T-1 transitions.
std::vector<double> turnover_series(const RankedList& lists, std::size_t y_max);

/// y values used in the power-law fit: every y up to 100, then roughly 20
/// log-spaced values per decade up to y_max.
std::vector<std::size_t> turnover_fit_grid(std::size_t y_max);

struct TurnoverResult {
  std::vector<std::size_t> y;  // 1..y_max
  std::vector<double> z;
  FitResult a;
  FitResult b;
  std::size_t fitted_points = 0;
  TurnoverShape shape = TurnoverShape::linear;
};

/// Turnover series plus a least-squares fit of log z = log a + b log y over
/// the fit grid, skipping y with z(y) = 0. Throws FitUndefinedError if
/// there are fewer than 3 non-zero points.
TurnoverResult turnover(const RankedList& lists, std::size_t y_max);

}  // namespace wordrank
