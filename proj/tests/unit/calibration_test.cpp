#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "wordrank/calibration.hpp"
#include "wordrank/distributions.hpp"
#include "wordrank/errors.hpp"
#include "wordrank/random.hpp"

using namespace wordrank;
using doctest::Approx;

TEST_CASE("student t critical values") {
  // Two-sided 99% quantiles from standard tables.
  CHECK(student_t_critical(0.99, 1) == Approx(63.656741).epsilon(1e-6));
  CHECK(student_t_critical(0.99, 8) == Approx(3.355387).epsilon(1e-6));
  CHECK(student_t_critical(0.99, 48) == Approx(2.682204).epsilon(1e-6));
  CHECK(student_t_critical(0.95, 10) == Approx(2.228139).epsilon(1e-6));
  CHECK_THROWS_AS(student_t_critical(1.0, 5), DomainError);
  CHECK_THROWS_AS(student_t_critical(0.9, 0), DomainError);
}

TEST_CASE("exact line") {
  std::vector<double> x, y;
  for (int i = 0; i < 10; ++i) {
    x.push_back(i);
    y.push_back(2.0 * i + 1);
  }
  const auto f = fit_loglinear(x, y);
  CHECK(f.slope.estimate == Approx(2.0));
  CHECK(f.intercept.estimate == Approx(1.0));
  CHECK(f.slope.ci_high - f.slope.ci_low == Approx(0.0).epsilon(1e-9));
  CHECK(f.intercept.ci_high - f.intercept.ci_low == Approx(0.0).epsilon(1e-9));
  CHECK(f.slope.n_points == 10);
  CHECK(f.slope.confidence == kFitConfidence);

  const std::vector<double> flat(10, 3.0);
  CHECK(fit_loglinear(x, flat).slope.estimate == Approx(0.0));
}

TEST_CASE("fit errors") {
  const std::vector<double> two = {1, 2};
  const std::vector<double> three = {1, 2, 3};
  const std::vector<double> same = {4, 4, 4};
  CHECK_THROWS_AS(fit_loglinear(two, two), InsufficientDataError);
  CHECK_THROWS_AS(fit_loglinear(three, two), ShapeError);
  CHECK_THROWS_AS(fit_loglinear(same, three), SingularDesignError);
  const std::vector<double> bad = {1, std::nan(""), 3};
  CHECK_THROWS_AS(fit_loglinear(three, bad), DomainError);
}

TEST_CASE("fit matches a textbook computation") {
  const std::vector<double> x = {1, 2, 3, 4, 5, 6};
  const std::vector<double> y = {1.1, 1.9, 3.2, 3.8, 5.3, 5.9};
  // Hand sums: xbar 3.5, Sxx 17.5, Sxy 17.4.
  const double slope = 17.4 / 17.5;
  const double intercept = 3.5333333333333333 - slope * 3.5;
  double ssr = 0;
  for (int i = 0; i < 6; ++i) {
    const double r = y[i] - intercept - slope * x[i];
    ssr += r * r;
  }
  const double s2 = ssr / 4;
  const double half = 4.604095 * std::sqrt(s2 / 17.5);
  const auto f = fit_loglinear(x, y);
  CHECK(f.slope.estimate == Approx(slope));
  CHECK(f.intercept.estimate == Approx(intercept));
  CHECK(f.slope.residual_variance == Approx(s2));
  CHECK(f.slope.ci_high - f.slope.estimate == Approx(half).epsilon(1e-6));
  CHECK(f.slope.estimate - f.slope.ci_low == Approx(half).epsilon(1e-6));
}

TEST_CASE("99 percent intervals cover the true slope") {
  std::mt19937_64 gen(123);
  std::normal_distribution<double> noise(0.0, 0.1);
  std::vector<double> x(50);
  for (int i = 0; i < 50; ++i) {
    x[i] = i / 10.0;
  }
  int covered = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> y(50);
    for (int i = 0; i < 50; ++i) {
      y[i] = 2 * x[i] + 1 + noise(gen);
    }
    const auto f = fit_loglinear(x, y);
    covered += (f.slope.ci_low <= 2 && 2 <= f.slope.ci_high) ? 1 : 0;
  }
  CHECK(covered >= 980);
}

TEST_CASE("corpus growth fit") {
  std::vector<Count> exact;
  for (std::uint64_t t = 0; t < 109; ++t) {
    exact.push_back(corpus_size(t, {0.02, 10000}));
  }
  // The ceiling turns the series into steps, which biases the slope low:
  // about 0.0161 over 109 steps. Compare with a direct least-squares sum.
  double tbar = 54, lbar = 0;
  for (auto n : exact) {
    lbar += std::log(static_cast<double>(n)) / 109;
  }
  double sxy = 0, sxx = 0;
  for (int t = 0; t < 109; ++t) {
    sxy += (t - tbar) * (std::log(static_cast<double>(exact[t])) - lbar);
    sxx += (t - tbar) * (t - tbar);
  }
  const auto growth = fit_corpus_growth(exact);
  CHECK(growth.alpha.estimate == Approx(sxy / sxx).epsilon(1e-10));
  CHECK(growth.alpha.estimate < 0.02);
  CHECK(growth.alpha.estimate > 0.015);

  const std::vector<Count> constant(20, 5000);
  const auto f = fit_corpus_growth(constant);
  CHECK(f.alpha.estimate == Approx(0.0));
  CHECK(f.ln_beta.estimate == Approx(std::log(5000.0)));

  // A series that grows exactly exponentially is recovered exactly.
  std::vector<Count> smooth;
  for (int t = 0; t < 30; ++t) {
    smooth.push_back(static_cast<Count>(std::llround(1000 * std::exp(0.5 * t))));
  }
  CHECK(fit_corpus_growth(smooth).alpha.estimate == Approx(0.5).epsilon(1e-6));

  const std::vector<Count> with_zero = {10, 0, 30};
  CHECK_THROWS_AS(fit_corpus_growth(with_zero), DomainError);
}

TEST_CASE("zipf shape fit") {
  const auto p = zipf_pmf({1.0, 100});
  const auto f = fit_zipf_shape(p);
  CHECK(f.a.estimate == Approx(1.0).epsilon(1e-6));
  // Mean rank of a = 1, c = 100 is about 19.28, so ranks 1..20 are used.
  CHECK(f.cutoff_rank == 20);
  CHECK(f.a.n_points == 20);
  CHECK(f.a.ci_low <= f.a.estimate);
  CHECK(f.a.ci_high >= f.a.estimate);

  const auto steep = zipf_pmf({3.0, 50});
  CHECK_THROWS_AS(fit_zipf_shape(steep), InsufficientDataError);
  CHECK_THROWS_AS(fit_zipf_shape(std::vector<double>{0.5, 0.5}), InsufficientDataError);
  CHECK_THROWS_AS(fit_zipf_shape(std::vector<double>{0.5, 0.0, 0.5}), DomainError);

  RandomStream rng(31);
  double total = 0;
  for (int i = 0; i < 20; ++i) {
    total += fit_zipf_shape(zipf_sample_initial({1.0, 1000}, 100000, rng)).a.estimate;
  }
  CHECK(std::abs(total / 20 - 1.0) < 0.05);
}
