#include "wordrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wordrank/errors.hpp"

namespace wordrank {
namespace {

std::vector<Rank> ranks_from_order(const std::vector<std::size_t>& order) {
  std::vector<Rank> ranks(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    ranks[order[k]] = static_cast<Rank>(k + 1);
  }
  return ranks;
}

}  // namespace

void RboParams::validate() const {
  if (!(p >= 0 && p <= 1)) {
    throw DomainError("rbo persistence p must lie in [0, 1], got " + std::to_string(p));
  }
}

std::vector<Rank> assign_ranks(std::span<const Count> freq_column,
                               std::span<const std::string> words) {
  if (freq_column.size() != words.size()) {
    throw ShapeError("assign_ranks: " + std::to_string(freq_column.size()) + " counts for " +
                     std::to_string(words.size()) + " words");
  }
  std::vector<std::size_t> order(freq_column.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (freq_column[i] != freq_column[j]) {
      return freq_column[i] > freq_column[j];
    }
    if (words[i] != words[j]) {
      return words[i] < words[j];
    }
    return i < j;
  });
  return ranks_from_order(order);
}

std::vector<Rank> assign_ranks(std::span<const Count> freq_column) {
  return ranks_from_order(order_by_descending(freq_column));
}

RankMatrix rank_matrix(const FrequencyMatrix& freqs) {
  freqs.validate();
  RankMatrix out{Grid<Rank>(freqs.vocab(), freqs.steps()), freqs.words};
  for (std::size_t t = 0; t < freqs.steps(); ++t) {
    const auto ranks = assign_ranks(freqs.counts.column(t), freqs.words);
    std::copy(ranks.begin(), ranks.end(), out.ranks.column(t).begin());
  }
  return out;
}

RankedList ranked_list(const RankMatrix& ranks) {
  const std::size_t c = ranks.vocab();
  RankedList out;
  out.words = ranks.words;
  out.lists.reserve(ranks.steps());
  for (std::size_t t = 0; t < ranks.steps(); ++t) {
    Ordering list(c, 0);
    std::vector<bool> filled(c, false);
    const auto column = ranks.ranks.column(t);
    for (std::size_t w = 0; w < c; ++w) {
      const Rank r = column[w];
      if (r < 1 || r > c || filled[r - 1]) {
        throw IntegrityError("rank column " + std::to_string(t) +
                             " is not a permutation of 1.." + std::to_string(c));
      }
      filled[r - 1] = true;
      list[r - 1] = static_cast<WordId>(w);
    }
    out.lists.push_back(std::move(list));
  }
  return out;
}

RankMatrix rank_matrix(const RankedList& lists) {
  const std::size_t c = lists.vocab();
  RankMatrix out{Grid<Rank>(c, lists.steps()), lists.words};
  for (std::size_t t = 0; t < lists.steps(); ++t) {
    const auto& list = lists.lists[t];
    if (list.size() != c) {
      throw IntegrityError("ranked list " + std::to_string(t) + " has the wrong length");
    }
    std::vector<bool> seen(c, false);
    for (std::size_t k = 0; k < c; ++k) {
      const WordId w = list[k];
      if (w >= c || seen[w]) {
        throw IntegrityError("ranked list " + std::to_string(t) + " is not a permutation");
      }
      seen[w] = true;
      out.ranks(w, t) = static_cast<Rank>(k + 1);
    }
  }
  return out;
}

RankChangeSummary rank_change_summary(const RankMatrix& ranks) {
  const std::size_t c = ranks.vocab();
  const std::size_t steps = ranks.steps();
  if (steps < 2) {
    throw InsufficientDataError("rank change statistics need at least 2 time steps, got " +
                                std::to_string(steps));
  }
  const double n_diff = static_cast<double>(steps - 1);

  RankChangeSummary out;
  out.sum.resize(c);
  out.normalized_sum.resize(c);
  out.variance.resize(c);
  out.normalized_variance.assign(c, 0.0);

  double max_variance = 0;
  for (std::size_t w = 0; w < c; ++w) {
    const auto first = static_cast<std::int64_t>(ranks.ranks(w, 0));
    const auto last = static_cast<std::int64_t>(ranks.ranks(w, steps - 1));
    out.sum[w] = last - first;
    out.normalized_sum[w] = static_cast<double>(out.sum[w]) / static_cast<double>(c);

    const double mean = static_cast<double>(out.sum[w]) / n_diff;
    double ss = 0;
    for (std::size_t t = 1; t < steps; ++t) {
      const double diff = static_cast<double>(ranks.ranks(w, t)) -
                          static_cast<double>(ranks.ranks(w, t - 1)) - mean;
      ss += diff * diff;
    }
    out.variance[w] = ss / n_diff;
    max_variance = std::max(max_variance, out.variance[w]);
  }
  if (max_variance > 0) {
    for (std::size_t w = 0; w < c; ++w) {
      out.normalized_variance[w] = out.variance[w] / max_variance;
    }
  }
  return out;
}

double agreement(std::span<const WordId> s, std::span<const WordId> t, std::size_t depth) {
  if (depth < 1 || depth > std::min(s.size(), t.size())) {
    throw DomainError("agreement depth " + std::to_string(depth) + " outside 1.." +
                      std::to_string(std::min(s.size(), t.size())));
  }
  std::vector<WordId> a(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(depth));
  std::vector<WordId> b(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(depth));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<WordId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return static_cast<double>(common.size()) / static_cast<double>(depth);
}

double rbo(std::span<const WordId> s, std::span<const WordId> t, const RboParams& params) {
  params.validate();
  if (s.size() != t.size() || s.empty()) {
    throw DomainError("rbo needs two non-empty orderings of the same word set");
  }
  const std::size_t c = s.size();
  const WordId max_id = std::max(*std::max_element(s.begin(), s.end()),
                                 *std::max_element(t.begin(), t.end()));
  std::vector<char> in_s(static_cast<std::size_t>(max_id) + 1, 0);
  std::vector<char> in_t(static_cast<std::size_t>(max_id) + 1, 0);

  std::size_t overlap = 0;
  double total = 0;
  double weight = 1;
  for (std::size_t d = 0; d < c; ++d) {
    const WordId a = s[d];
    const WordId b = t[d];
    if (in_s[a] || in_t[b]) {
      throw DomainError("rbo: orderings contain duplicate words");
    }
    if (a == b) {
      ++overlap;
    } else {
      overlap += static_cast<std::size_t>(in_t[a]) + static_cast<std::size_t>(in_s[b]);
    }
    in_s[a] = 1;
    in_t[b] = 1;
    const double agree = static_cast<double>(overlap) / static_cast<double>(d + 1);
    if (params.p == 1.0) {
      total += agree;
    } else {
      total += weight * agree;
      weight *= params.p;
    }
  }
  if (overlap != c) {
    throw DomainError("rbo: orderings are not permutations of the same word set");
  }
  return params.p == 1.0 ? total / static_cast<double>(c) : (1 - params.p) * total;
}

std::vector<double> rbo_curve(const RankedList& lists, RboComparison comparison,
                              const RboParams& params) {
  const std::size_t steps = lists.steps();
  std::vector<double> curve;
  if (comparison.kind == RboComparison::Kind::from_initial) {
    if (steps < 1) {
      throw InsufficientDataError("rbo curve of an empty ranked list");
    }
    curve.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) {
      curve.push_back(rbo(lists.lists[0], lists.lists[t], params));
    }
    return curve;
  }
  if (comparison.lag < 1) {
    throw DomainError("rbo lag must be >= 1");
  }
  if (steps <= comparison.lag) {
    throw InsufficientDataError("rbo lag " + std::to_string(comparison.lag) + " needs more than " +
                                std::to_string(comparison.lag) + " time steps, got " +
                                std::to_string(steps));
  }
  curve.reserve(steps - comparison.lag);
  for (std::size_t t = 0; t + comparison.lag < steps; ++t) {
    curve.push_back(rbo(lists.lists[t], lists.lists[t + comparison.lag], params));
  }
  return curve;
}

TurnoverShape classify_turnover(double b) {
  if (b > 1) {
    return TurnoverShape::conformity;
  }
  if (b < 1) {
    return TurnoverShape::anti_conformity;
  }
  return TurnoverShape::linear;
}

const char* to_string(TurnoverShape shape) {
  switch (shape) {
    case TurnoverShape::conformity:
      return "conformity";
    case TurnoverShape::anti_conformity:
      return "anti-conformity";
    case TurnoverShape::linear:
      return "linear";
  }
  return "unknown";
}

std::vector<double> turnover_series(const RankedList& lists, std::size_t y_max) {
  const std::size_t c = lists.vocab();
  const std::size_t steps = lists.steps();
  if (y_max < 1 || y_max > c) {
    throw DomainError("turnover list size must lie in 1.." + std::to_string(c));
  }
  if (steps < 2) {
    throw InsufficientDataError("turnover needs at least 2 time steps");
  }
  const auto ranks = rank_matrix(lists);

  // A word at rank r0 at t and r1 < r0 at t+1 enters every top-y list with
  // r1 <= y < r0; accumulate that range with a difference array.
  std::vector<std::int64_t> delta(c + 2, 0);
  for (std::size_t t = 0; t + 1 < steps; ++t) {
    for (std::size_t w = 0; w < c; ++w) {
      const Rank r0 = ranks.ranks(w, t);
      const Rank r1 = ranks.ranks(w, t + 1);
      if (r1 < r0) {
        delta[r1] += 1;
        delta[r0] -= 1;
      }
    }
  }
  std::vector<double> z(y_max);
  std::int64_t running = 0;
  for (std::size_t y = 1; y <= y_max; ++y) {
    running += delta[y];
    z[y - 1] = static_cast<double>(running) / static_cast<double>(steps - 1);
  }
  return z;
}

std::vector<std::size_t> turnover_fit_grid(std::size_t y_max) {
  std::vector<std::size_t> grid;
  const std::size_t dense = std::min<std::size_t>(100, y_max);
  for (std::size_t y = 1; y <= dense; ++y) {
    grid.push_back(y);
  }
  if (y_max > 100) {
    for (int k = 1;; ++k) {
      const auto y = static_cast<std::size_t>(std::llround(100.0 * std::pow(10.0, k / 20.0)));
      if (y >= y_max) {
        break;
      }
      if (y > grid.back()) {
        grid.push_back(y);
      }
    }
    grid.push_back(y_max);
  }
  return grid;
}

TurnoverResult turnover(const RankedList& lists, std::size_t y_max) {
  TurnoverResult out;
  out.z = turnover_series(lists, y_max);
  out.y.resize(y_max);
  std::iota(out.y.begin(), out.y.end(), std::size_t{1});

  std::vector<double> log_y;
  std::vector<double> log_z;
  for (std::size_t y : turnover_fit_grid(y_max)) {
    const double z = out.z[y - 1];
    if (z > 0) {
      log_y.push_back(std::log(static_cast<double>(y)));
      log_z.push_back(std::log(z));
    }
  }
  if (log_y.size() < 3) {
    throw FitUndefinedError("turnover is zero at all but " + std::to_string(log_y.size()) +
                            " list sizes; the power-law fit is undefined");
  }
  const auto fit = fit_loglinear(log_y, log_z);
  out.b = fit.slope;
  out.a = fit.intercept;
  out.a.estimate = std::exp(fit.intercept.estimate);
  out.a.ci_low = std::exp(fit.intercept.ci_low);
  out.a.ci_high = std::exp(fit.intercept.ci_high);
  out.fitted_points = log_y.size();
  out.shape = classify_turnover(out.b.estimate);
  return out;
}

}  // namespace wordrank
