#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace wordrank {

/// Dense words x time grid stored column-major: all words of one time step
/// are contiguous, so per-year ranking and summation are linear scans.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t row, std::size_t col) { return data_[col * rows_ + row]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data_[col * rows_ + row]; }

  std::span<T> column(std::size_t col) { return {data_.data() + col * rows_, rows_}; }
  std::span<const T> column(std::size_t col) const { return {data_.data() + col * rows_, rows_}; }

  /// Copy of one row (a single word's time series).
  std::vector<T> row(std::size_t r) const {
    std::vector<T> out(cols_);
    for (std::size_t t = 0; t < cols_; ++t) {
      out[t] = (*this)(r, t);
    }
    return out;
  }

  std::span<const T> data() const { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealGrid = Grid<double>;

/// Zero-padded identifiers "w0001".."w1000" whose lexicographic order equals
/// index order, so text and index tie-breaking agree for simulated words.
std::vector<std::string> simulated_word_ids(std::size_t count);

}  // namespace wordrank
