#include "wordrank/wf_engine.hpp"

#include <cmath>
#include <string>

#include "wordrank/errors.hpp"

namespace wordrank {

void FrequencyMatrix::validate() const {
  if (words.size() != counts.rows()) {
    throw ShapeError("frequency matrix has " + std::to_string(counts.rows()) + " rows but " +
                     std::to_string(words.size()) + " words");
  }
  for (Count x : counts.data()) {
    if (x < 1) {
      throw DomainError("frequency matrix entries must be >= 1");
    }
  }
}

CountVector FrequencyMatrix::column_totals() const {
  CountVector totals(steps(), 0);
  for (std::size_t t = 0; t < steps(); ++t) {
    for (Count x : counts.column(t)) {
      totals[t] += x;
    }
  }
  return totals;
}

void SimulationConfig::validate() const {
  zipf().validate();
  growth().validate();
  if (beta < vocab) {
    throw DomainError("initial corpus size beta=" + std::to_string(beta) +
                      " is smaller than vocabulary c=" + std::to_string(vocab));
  }
  if (steps < 1) {
    throw DomainError("number of time steps T must be >= 1");
  }
  if (replicates < 1) {
    throw DomainError("replicates must be >= 1");
  }
  corpus_size(steps - 1, growth());
}

CountVector step(std::span<const Count> prev, Count n_next, RandomStream& rng) {
  std::vector<double> weights(prev.size());
  for (std::size_t w = 0; w < prev.size(); ++w) {
    if (prev[w] < 1) {
      throw DomainError("previous generation has a word with zero tokens");
    }
    weights[w] = static_cast<double>(prev[w]);
  }
  return sample_multinomial_weighted(weights, n_next, rng);
}

FrequencyMatrix simulate_counts(const SimulationConfig& config, std::size_t replicate) {
  config.validate();
  auto rng = replicate_stream(config.seed, replicate);
  FrequencyMatrix freqs{Grid<Count>(config.vocab, config.steps), simulated_word_ids(config.vocab)};

  auto current = zipf_sample_initial(config.zipf(), config.beta, rng);
  std::copy(current.begin(), current.end(), freqs.counts.column(0).begin());
  for (std::size_t t = 1; t < config.steps; ++t) {
    current = step(current, corpus_size(t, config.growth()), rng);
    std::copy(current.begin(), current.end(), freqs.counts.column(t).begin());
  }
  return freqs;
}

Trajectory make_trajectory(FrequencyMatrix freqs) {
  Trajectory out;
  out.proportions = normalize_proportions(freqs);
  out.zscores = normalize_zscores(out.proportions);
  out.ranks = rank_matrix(freqs);
  out.frequencies = std::move(freqs);
  return out;
}

Trajectory simulate(const SimulationConfig& config, std::size_t replicate) {
  return make_trajectory(simulate_counts(config, replicate));
}

std::vector<Trajectory> ensemble(const SimulationConfig& config, unsigned threads) {
  return map_replicates(
      config, [](std::size_t, FrequencyMatrix&& freqs) { return make_trajectory(std::move(freqs)); },
      threads);
}

RealGrid normalize_proportions(const FrequencyMatrix& freqs) {
  freqs.validate();
  RealGrid props(freqs.vocab(), freqs.steps());
  for (std::size_t t = 0; t < freqs.steps(); ++t) {
    const auto column = freqs.counts.column(t);
    Count total = 0;
    for (Count x : column) {
      total += x;
    }
    auto out = props.column(t);
    for (std::size_t w = 0; w < column.size(); ++w) {
      out[w] = static_cast<double>(column[w]) / static_cast<double>(total);
    }
  }
  return props;
}

ZScores normalize_zscores(const RealGrid& props) {
  const std::size_t rows = props.rows();
  const std::size_t cols = props.cols();
  ZScores out{RealGrid(rows, cols, 0.0), std::vector<bool>(rows, false)};
  if (cols == 0) {
    return out;
  }
  for (std::size_t w = 0; w < rows; ++w) {
    double mean = 0;
    for (std::size_t t = 0; t < cols; ++t) {
      mean += props(w, t);
    }
    mean /= static_cast<double>(cols);
    double ss = 0;
    for (std::size_t t = 0; t < cols; ++t) {
      ss += (props(w, t) - mean) * (props(w, t) - mean);
    }
    const double sd = std::sqrt(ss / static_cast<double>(cols));
    // A row whose spread is pure rounding noise counts as constant.
    if (!(sd > 1e-14 * std::max(1.0, std::abs(mean)))) {
      out.constant_rows[w] = true;
      continue;
    }
    for (std::size_t t = 0; t < cols; ++t) {
      out.values(w, t) = (props(w, t) - mean) / sd;
    }
  }
  return out;
}

}  // namespace wordrank
