#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wordrank/distributions.hpp"
#include "wordrank/errors.hpp"
#include "wordrank/random.hpp"

using namespace wordrank;
using doctest::Approx;

TEST_CASE("zipf pmf small cases") {
  auto two = zipf_pmf({1.0, 2});
  CHECK(two[0] == Approx(2.0 / 3));
  CHECK(two[1] == Approx(1.0 / 3));

  for (double p : zipf_pmf({0.0, 5})) {
    CHECK(p == Approx(0.2));
  }

  const auto four = zipf_pmf({1.0, 4});
  const std::vector<double> expected = {0.48, 0.24, 0.16, 0.12};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(four[i] == Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("zipf pmf is a decreasing probability vector") {
  for (double a : {0.3, 1.0, 2.5}) {
    for (std::size_t c : {1u, 7u, 1000u, 100000u}) {
      const auto p = zipf_pmf({a, c});
      REQUIRE(p.size() == c);
      CHECK(std::accumulate(p.begin(), p.end(), 0.0) == Approx(1.0).epsilon(1e-12));
      for (std::size_t i = 1; i < c; ++i) {
        REQUIRE(p[i] < p[i - 1]);
      }
    }
  }
}

TEST_CASE("zipf parameter validation") {
  CHECK_THROWS_AS(zipf_pmf({-0.1, 3}), DomainError);
  CHECK_THROWS_AS(zipf_pmf({1.0, 0}), DomainError);
  CHECK_THROWS_AS(zipf_pmf({std::nan(""), 3}), DomainError);
}

TEST_CASE("zipf expected rank") {
  CHECK(zipf_expected_rank({0.0, 3}) == Approx(2.0));
  CHECK(zipf_expected_rank({1.7, 1}) == Approx(1.0));
  CHECK(zipf_expected_rank({1.0, 2}) == Approx(4.0 / 3));
  // Direct sum for a = 1, c = 100: 100 / H_100.
  double h = 0;
  for (int k = 1; k <= 100; ++k) {
    h += 1.0 / k;
  }
  CHECK(zipf_expected_rank({1.0, 100}) == Approx(100 / h).epsilon(1e-12));
}

TEST_CASE("corpus size") {
  CHECK(corpus_size(0, {0.7, 500}) == 500);
  for (std::uint64_t t : {0u, 5u, 108u}) {
    CHECK(corpus_size(t, {0.0, 10000}) == 10000);
  }
  CHECK(corpus_size(109, {0.01, 100000}) == 300000);
  // The ceiling applies to the exponential alone: exp(0.01) = 1.01 rounds up to 2.
  CHECK(corpus_size(1, {0.01, 100000}) == 200000);
  CHECK_THROWS_AS(corpus_size(100, {1.0, 1}), OverflowError);
  CHECK_THROWS_AS(corpus_size(10, {1.0, std::uint64_t{1} << 60}), OverflowError);
  CHECK_THROWS_AS(corpus_size(1, {-0.1, 5}), DomainError);
  CHECK_THROWS_AS(corpus_size(1, {0.1, 0}), DomainError);
}

TEST_CASE("corpus size is non-decreasing in t") {
  const GrowthParams g{0.013, 777};
  Count prev = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    const Count n = corpus_size(t, g);
    REQUIRE(n >= prev);
    REQUIRE(n % 777 == 0);
    prev = n;
  }
}

TEST_CASE("binomial envelope") {
  auto e = binomial_envelope(0.0, 100, 4);
  CHECK(e.mu == 0);
  CHECK(e.sigma == 0);
  e = binomial_envelope(1.0, 100, 4);
  CHECK(e.mu == Approx(96));
  CHECK(e.sigma == 0);
  e = binomial_envelope(0.5, 104, 4);
  CHECK(e.mu == Approx(50));
  CHECK(e.sigma == Approx(5));
  CHECK(e.lower() == Approx(30));
  CHECK(e.upper() == Approx(70));
  CHECK_THROWS_AS(binomial_envelope(0.5, 3, 4), DomainError);
  CHECK_THROWS_AS(binomial_envelope(1.5, 10, 4), DomainError);
}

TEST_CASE("log binomial pmf") {
  CHECK(log_binomial_pmf(0, 5, 0.0) == Approx(0.0));
  CHECK(log_binomial_pmf(5, 5, 1.0) == Approx(0.0));
  CHECK(log_binomial_pmf(1, 2, 0.5) == Approx(std::log(0.5)));
  CHECK(std::isinf(log_binomial_pmf(1, 5, 0.0)));
  CHECK_THROWS_AS(log_binomial_pmf(6, 5, 0.5), DomainError);

  // Exhaustive check against factorials.
  for (int n = 0; n <= 20; ++n) {
    for (double p : {0.1, 0.37, 0.5, 0.93}) {
      for (int r = 0; r <= n; ++r) {
        const double exact = oracle::factorial(n) / (oracle::factorial(r) * oracle::factorial(n - r)) *
                             std::pow(p, r) * std::pow(1 - p, n - r);
        REQUIRE(log_binomial_pmf(r, n, p) == Approx(std::log(exact)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("guarded multinomial trivial cases") {
  RandomStream rng(5);
  const std::vector<double> one = {1.0};
  CHECK(sample_multinomial_guarded(one, 7, rng) == CountVector{7});

  const auto p = zipf_pmf({1.0, 6});
  CHECK(sample_multinomial_guarded(p, 6, rng) == CountVector(6, 1));

  CHECK_THROWS_AS(sample_multinomial_guarded(p, 5, rng), InfeasibleError);
  const std::vector<double> bad = {0.5, 0.6};
  CHECK_THROWS_AS(sample_multinomial_guarded(bad, 10, rng), DomainError);
}

TEST_CASE("guarded multinomial conserves tokens and keeps every word") {
  RandomStream rng(6);
  const auto p = zipf_pmf({1.2, 300});
  for (Count n : {Count{300}, Count{301}, Count{5000}, Count{123456789}}) {
    const auto x = sample_multinomial_guarded(p, n, rng);
    CHECK(std::accumulate(x.begin(), x.end(), Count{0}) == n);
    for (auto v : x) {
      REQUIRE(v >= 1);
    }
  }
}

TEST_CASE("guarded multinomial means match (N - c) p + 1") {
  RandomStream rng(7);
  const auto p = zipf_pmf({1.0, 4});
  const Count n = 200;
  const int reps = 10000;
  std::vector<double> sum(4, 0);
  for (int i = 0; i < reps; ++i) {
    const auto x = sample_multinomial_guarded(p, n, rng);
    for (int w = 0; w < 4; ++w) {
      sum[w] += static_cast<double>(x[w]);
    }
  }
  for (int w = 0; w < 4; ++w) {
    const double mean = 196 * p[w] + 1;
    const double se = std::sqrt(196 * p[w] * (1 - p[w]) / reps);
    CHECK(std::abs(sum[w] / reps - mean) < 3 * se);
  }
}

TEST_CASE("guarded multinomial marginal matches the binomial pmf") {
  RandomStream rng(8);
  const auto p = zipf_pmf({1.0, 5});
  const Count n = 60;
  const std::uint64_t draws = 100000;
  for (std::size_t w : {0u, 2u, 4u}) {
    std::vector<std::uint64_t> observed(n - 5 + 1, 0);
    RandomStream local = replicate_stream(8, w);
    for (std::uint64_t i = 0; i < draws; ++i) {
      ++observed[sample_multinomial_guarded(p, n, local)[w] - 1];
    }
    const auto result = oracle::chi_square(observed, oracle::binomial_pmf(n - 5, p[w]), draws);
    CHECK(oracle::chi_square_z(result) < 5.0);
  }
}

TEST_CASE("initial zipf sample") {
  RandomStream rng(9);
  CHECK(zipf_sample_initial({1.0, 1}, 100, rng) == CountVector{100});
  CHECK(zipf_sample_initial({1.0, 9}, 9, rng) == CountVector(9, 1));

  const ZipfParams z{1.0, 4};
  const auto p = zipf_pmf(z);
  const int reps = 10000;
  int inside = 0;
  for (int i = 0; i < reps; ++i) {
    const auto x = zipf_sample_initial(z, 200, rng);
    for (int w = 0; w < 4; ++w) {
      const auto e = binomial_envelope(p[w], 200, 4);
      const double v = static_cast<double>(x[w] - 1);
      inside += (v >= e.lower() && v <= e.upper()) ? 1 : 0;
    }
  }
  CHECK(static_cast<double>(inside) / (4.0 * reps) >= 0.999);
}

TEST_CASE("sample mean rank") {
  CHECK(sample_mean_rank(std::vector<Count>{5}) == Approx(1.0));
  CHECK(sample_mean_rank(std::vector<Count>{3, 3}) == Approx(1.5));
  CHECK(sample_mean_rank(std::vector<Count>{6, 3, 1}) == Approx(1.5));
  CHECK(sample_mean_rank(std::vector<double>{0.6, 0.3, 0.1}) == Approx(1.5));
  // Ranks come from the counts, not from the input order.
  CHECK(sample_mean_rank(std::vector<Count>{1, 3, 6}) == Approx(1.5));
  CHECK_THROWS_AS(sample_mean_rank(std::vector<Count>{}), DomainError);
  CHECK_THROWS_AS(sample_mean_rank(std::vector<Count>{3, 0}), DomainError);
}

TEST_CASE("expected rank gap") {
  CHECK(expected_rank_gap({1.3, 1}, std::vector<Count>{42}) == Approx(0.0));
  CHECK(expected_rank_gap({0.0, 2}, std::vector<Count>{5, 5}) == Approx(0.0));
  CHECK_THROWS_AS(expected_rank_gap({1.0, 3}, std::vector<Count>{5, 5}), ShapeError);

  RandomStream rng(10);
  const ZipfParams z{1.0, 100};
  double total = 0;
  for (int i = 0; i < 100; ++i) {
    total += expected_rank_gap(z, zipf_sample_initial(z, 1'000'000, rng));
  }
  CHECK(std::abs(total / 100) < 0.05);
}

TEST_CASE("order by descending is stable") {
  const std::vector<Count> f = {3, 7, 7, 1};
  CHECK(order_by_descending<Count>(f) == std::vector<std::size_t>{1, 2, 0, 3});
}
