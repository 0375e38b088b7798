#include "wordrank/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "wordrank/errors.hpp"

namespace wordrank {
namespace {

FitResult interval(double estimate, double std_error, double t_crit, std::size_t n,
                   double residual_variance) {
  FitResult fit;
  fit.estimate = estimate;
  fit.ci_low = estimate - t_crit * std_error;
  fit.ci_high = estimate + t_crit * std_error;
  fit.n_points = n;
  fit.residual_variance = residual_variance;
  return fit;
}

FitResult negated(const FitResult& fit) {
  FitResult out = fit;
  out.estimate = -fit.estimate;
  out.ci_low = -fit.ci_high;
  out.ci_high = -fit.ci_low;
  return out;
}

}  // namespace

double student_t_critical(double confidence, double degrees_of_freedom) {
  if (!(confidence > 0 && confidence < 1) || !(degrees_of_freedom > 0)) {
    throw DomainError("student-t critical value needs confidence in (0,1) and dof > 0");
  }
  const boost::math::students_t dist(degrees_of_freedom);
  return boost::math::quantile(boost::math::complement(dist, (1 - confidence) / 2));
}

LinearFit fit_loglinear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ShapeError("fit_loglinear: x has " + std::to_string(x.size()) +
                     " points, y has " + std::to_string(y.size()));
  }
  const std::size_t n = x.size();
  if (n < 3) {
    throw InsufficientDataError("fit_loglinear needs at least 3 points, got " +
                                std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw DomainError("fit_loglinear: non-finite input at index " + std::to_string(i));
    }
  }

  const double nd = static_cast<double>(n);
  double x_mean = 0;
  double y_mean = 0;
  for (std::size_t i = 0; i < n; ++i) {
    x_mean += x[i];
    y_mean += y[i];
  }
  x_mean /= nd;
  y_mean /= nd;

  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - x_mean) * (x[i] - x_mean);
    sxy += (x[i] - x_mean) * (y[i] - y_mean);
  }
  if (!(sxx > 0)) {
    throw SingularDesignError("fit_loglinear: all x values are equal");
  }

  const double slope = sxy / sxx;
  const double intercept = y_mean - slope * x_mean;

  double ssr = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (slope * x[i] + intercept);
    ssr += r * r;
  }
  const double dof = nd - 2;
  const double s2 = ssr / dof;
  const double t_crit = student_t_critical(kFitConfidence, dof);

  LinearFit fit;
  fit.slope = interval(slope, std::sqrt(s2 / sxx), t_crit, n, s2);
  fit.intercept =
      interval(intercept, std::sqrt(s2 * (1.0 / nd + x_mean * x_mean / sxx)), t_crit, n, s2);
  return fit;
}

CorpusGrowthFit fit_corpus_growth(std::span<const Count> yearly_totals) {
  std::vector<double> t(yearly_totals.size());
  std::vector<double> log_n(yearly_totals.size());
  for (std::size_t i = 0; i < yearly_totals.size(); ++i) {
    if (yearly_totals[i] < 1) {
      throw DomainError("corpus totals must be >= 1 (year index " + std::to_string(i) + ")");
    }
    t[i] = static_cast<double>(i);
    log_n[i] = std::log(static_cast<double>(yearly_totals[i]));
  }
  const auto fit = fit_loglinear(t, log_n);
  return {fit.slope, fit.intercept};
}

ZipfShapeFit fit_zipf_shape(std::span<const double> initial_freqs) {
  if (initial_freqs.size() < 3) {
    throw InsufficientDataError("zipf shape fit needs at least 3 words");
  }
  double total = 0;
  for (double f : initial_freqs) {
    if (!(f > 0) || !std::isfinite(f)) {
      throw DomainError("zipf shape fit needs strictly positive frequencies");
    }
    total += f;
  }
  const double mean_rank = sample_mean_rank(initial_freqs);
  const auto cutoff =
      std::min(initial_freqs.size(), static_cast<std::size_t>(std::ceil(mean_rank)));
  if (cutoff < 3) {
    throw InsufficientDataError("truncation at sample mean rank " + std::to_string(mean_rank) +
                                " leaves fewer than 3 ranks to fit");
  }

  const auto order = order_by_descending(initial_freqs);
  std::vector<double> log_rank(cutoff);
  std::vector<double> log_prop(cutoff);
  for (std::size_t k = 0; k < cutoff; ++k) {
    log_rank[k] = std::log(static_cast<double>(k + 1));
    log_prop[k] = std::log(initial_freqs[order[k]] / total);
  }
  const auto fit = fit_loglinear(log_rank, log_prop);
  return {negated(fit.slope), fit.intercept, cutoff};
}

ZipfShapeFit fit_zipf_shape(std::span<const Count> initial_freqs) {
  std::vector<double> as_real(initial_freqs.begin(), initial_freqs.end());
  return fit_zipf_shape(std::span<const double>(as_real));
}

}  // namespace wordrank
