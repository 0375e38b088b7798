#pragma once

#include <string>
#include <vector>

#include "wordrank/distributions.hpp"
#include "wordrank/grid.hpp"

namespace wordrank {

/// Word counts, one row per word and one column per time step.
struct FrequencyMatrix {
  Grid<Count> counts;
  std::vector<std::string> words;

  std::size_t vocab() const { return counts.rows(); }
  std::size_t steps() const { return counts.cols(); }

  /// Throws ShapeError if words and rows disagree, DomainError if any count is 0.
  void validate() const;

  /// Per-column totals, i.e. the corpus size series.
  CountVector column_totals() const;

  friend bool operator==(const FrequencyMatrix&, const FrequencyMatrix&) = default;
};

}  // namespace wordrank
