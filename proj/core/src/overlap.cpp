#include "wordrank/overlap.hpp"

#include <algorithm>
#include <string>

#include "wordrank/errors.hpp"

namespace wordrank {
namespace {

class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}

  void add(std::size_t index) {
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) {
      ++tree_[i];
    }
  }

  /// Number of inserted indices < end.
  std::int64_t prefix(std::size_t end) const {
    std::int64_t total = 0;
    for (std::size_t i = end; i > 0; i -= i & (~i + 1)) {
      total += tree_[i];
    }
    return total;
  }

 private:
  std::vector<std::int64_t> tree_;
};

// Counts inserted segments with strictly positive overlap with [lo, hi].
// A degenerate segment (lo == hi) intersects anything in at most a point,
// so it never overlaps; for the rest the count is #{lo_v < hi} - #{hi_v <= lo}.
class OverlapCounter {
 public:
  explicit OverlapCounter(std::vector<double> coords)
      : coords_(std::move(coords)), lows_(coords_.size()), highs_(coords_.size()) {}

  void insert(double lo, double hi) {
    if (lo < hi) {
      lows_.add(lower(lo));
      highs_.add(lower(hi));
    }
  }

  std::int64_t count(double lo, double hi) const {
    if (!(lo < hi)) {
      return 0;
    }
    return lows_.prefix(lower(hi)) - highs_.prefix(upper(lo));
  }

 private:
  std::size_t lower(double x) const {
    return static_cast<std::size_t>(std::lower_bound(coords_.begin(), coords_.end(), x) -
                                    coords_.begin());
  }
  std::size_t upper(double x) const {
    return static_cast<std::size_t>(std::upper_bound(coords_.begin(), coords_.end(), x) -
                                    coords_.begin());
  }

  std::vector<double> coords_;
  Fenwick lows_;
  Fenwick highs_;
};

}  // namespace

double segment_overlap(const BinomialEnvelope& e1, const BinomialEnvelope& e2) {
  return std::min(e1.upper(kEnvelopeWidth), e2.upper(kEnvelopeWidth)) -
         std::max(e1.lower(kEnvelopeWidth), e2.lower(kEnvelopeWidth));
}

std::vector<std::int64_t> net_potential_of(std::span<const BinomialEnvelope> envelopes) {
  const std::size_t c = envelopes.size();
  std::vector<double> lo(c);
  std::vector<double> hi(c);
  std::vector<double> coords;
  coords.reserve(2 * c);
  for (std::size_t w = 0; w < c; ++w) {
    lo[w] = envelopes[w].lower(kEnvelopeWidth);
    hi[w] = envelopes[w].upper(kEnvelopeWidth);
    coords.push_back(lo[w]);
    coords.push_back(hi[w]);
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  // Overlaps with higher-ranked words (smaller index), swept in rank order.
  OverlapCounter prefix(coords);
  std::vector<std::int64_t> above(c);
  for (std::size_t w = 0; w < c; ++w) {
    above[w] = prefix.count(lo[w], hi[w]);
    prefix.insert(lo[w], hi[w]);
  }

  std::vector<std::int64_t> potential(c);
  for (std::size_t w = 0; w < c; ++w) {
    std::int64_t total = prefix.count(lo[w], hi[w]);
    if (lo[w] < hi[w]) {
      --total;  // the word's own segment
    }
    const std::int64_t below = total - above[w];
    potential[w] = below - above[w];
  }
  return potential;
}

OverlapReport net_potential(const ZipfParams& zipf, Count beta) {
  zipf.validate();
  if (beta < zipf.c) {
    throw DomainError("net potential needs beta >= c (beta=" + std::to_string(beta) +
                      ", c=" + std::to_string(zipf.c) + ")");
  }
  const auto pmf = zipf_pmf(zipf);
  OverlapReport report;
  report.beta = beta;
  report.envelopes.reserve(zipf.c);
  for (double p : pmf) {
    report.envelopes.push_back(binomial_envelope(p, beta, zipf.c));
  }
  report.net_potential = net_potential_of(report.envelopes);
  report.normalized_potential.reserve(zipf.c);
  for (auto n : report.net_potential) {
    report.normalized_potential.push_back(static_cast<double>(n) / static_cast<double>(zipf.c));
  }
  return report;
}

std::vector<OverlapReport> potential_profile(const ZipfParams& zipf,
                                             std::span<const Count> beta_values) {
  std::vector<OverlapReport> reports;
  reports.reserve(beta_values.size());
  for (Count beta : beta_values) {
    reports.push_back(net_potential(zipf, beta));
  }
  return reports;
}

}  // namespace wordrank
