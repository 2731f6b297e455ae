#pragma once

#include <cstdint>
#include <span>

#include "mzinfo/probability.hpp"

namespace mzinfo {

/// Click tallies for the two detectors.
struct ClickCounts {
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;

  std::uint64_t total() const noexcept { return n1 + n2; }

  ClickCounts& operator+=(const ClickCounts& other) noexcept {
    n1 += other.n1;
    n2 += other.n2;
    return *this;
  }
  friend bool operator==(const ClickCounts&, const ClickCounts&) = default;
};

/// Relative frequencies with the binomial standard error of p1_hat.
struct EmpiricalPair {
  ProbabilityPair pair;
  double stderr_p1;
  std::uint64_t trials;
};

/// (n1/n, n2/n) and sqrt(p_hat (1 - p_hat) / n). Throws DomainError for n = 0.
EmpiricalPair empirical_distribution(const ClickCounts& counts);

/// sqrt(p (1 - p) / n) for the true p.
double binomial_sigma(double p, std::uint64_t n);

/// (p_hat1 - p1) / binomial_sigma(p1, n). When sigma is zero the score is 0 if
/// the estimate equals the truth and +/-infinity otherwise.
double z_score(const EmpiricalPair& estimate, double p1);

/// Pearson chi-squared test that all rows share one detector-1 probability.
struct HomogeneityResult {
  double statistic;
  int degrees_of_freedom;
  double p_value;

  bool passes(double level) const noexcept { return p_value > 1.0 - level; }
};

/// Rows with zero trials are rejected with DomainError; fewer than two rows,
/// too. A pooled proportion of exactly 0 or 1 yields statistic 0, p-value 1.
HomogeneityResult chi_squared_homogeneity(std::span<const ClickCounts> rows);

}  // namespace mzinfo
