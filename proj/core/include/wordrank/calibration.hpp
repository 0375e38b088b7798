#pragma once

#include <cstddef>
#include <span>

#include "wordrank/distributions.hpp"

namespace wordrank {

/// Confidence level of every interval reported by the calibration module.
inline constexpr double kFitConfidence = 0.99;

/// Point estimate with a two-sided student-t confidence interval.
struct FitResult {
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double confidence = kFitConfidence;
  std::size_t n_points = 0;
  /// Residual variance of the underlying regression, SSR / (n - 2).
  double residual_variance = 0.0;
};

struct LinearFit {
  FitResult slope;
  FitResult intercept;
};

/// Two-sided student-t critical value for the given confidence level.
double student_t_critical(double confidence, double degrees_of_freedom);

/// Ordinary least squares y = slope * x + intercept with 99% CIs on both
/// coefficients (n - 2 degrees of freedom). Needs at least 3 points and
/// non-constant x.
LinearFit fit_loglinear(std::span<const double> x, std::span<const double> y);

struct CorpusGrowthFit {
  FitResult alpha;
  FitResult ln_beta;
};

/// Fits ln N(t) = alpha * t + ln beta to a yearly total series indexed t = 0, 1, ...
CorpusGrowthFit fit_corpus_growth(std::span<const Count> yearly_totals);

struct ZipfShapeFit {
  FitResult a;
  FitResult intercept;
  /// Highest rank kept: ceil(sample mean rank), capped at the vocabulary size.
  std::size_t cutoff_rank = 0;
};

/// Fits log proportion against log rank over ranks 1..ceil(sample mean rank)
/// and reports a = -slope.
ZipfShapeFit fit_zipf_shape(std::span<const double> initial_freqs);
ZipfShapeFit fit_zipf_shape(std::span<const Count> initial_freqs);

}  // namespace wordrank
