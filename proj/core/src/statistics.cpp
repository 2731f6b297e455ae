#include "mzinfo/statistics.hpp"

#include <cmath>
#include <limits>

#include <boost/math/distributions/chi_squared.hpp>

#include "mzinfo/errors.hpp"

namespace mzinfo {

EmpiricalPair empirical_distribution(const ClickCounts& counts) {
  const std::uint64_t n = counts.total();
  if (n == 0) throw DomainError("empirical distribution of zero trials");
  const double nd = static_cast<double>(n);
  const double p1 = static_cast<double>(counts.n1) / nd;
  const double p2 = static_cast<double>(counts.n2) / nd;
  return {ProbabilityPair(p1, p2), std::sqrt(p1 * (1.0 - p1) / nd), n};
}

double binomial_sigma(double p, std::uint64_t n) {
  if (n == 0) throw DomainError("binomial sigma of zero trials");
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double z_score(const EmpiricalPair& estimate, double p1) {
  const double sigma = binomial_sigma(p1, estimate.trials);
  const double diff = estimate.pair.p1() - p1;
  if (sigma > 0.0) return diff / sigma;
  if (diff == 0.0) return 0.0;
  return diff > 0.0 ? std::numeric_limits<double>::infinity()
                    : -std::numeric_limits<double>::infinity();
}

HomogeneityResult chi_squared_homogeneity(std::span<const ClickCounts> rows) {
  if (rows.size() < 2) throw DomainError("homogeneity test needs at least two rows");
  double total_n1 = 0.0;
  double total = 0.0;
  for (const ClickCounts& row : rows) {
    if (row.total() == 0) throw DomainError("homogeneity test row with zero trials");
    total_n1 += static_cast<double>(row.n1);
    total += static_cast<double>(row.total());
  }
  const int dof = static_cast<int>(rows.size()) - 1;
  const double pooled = total_n1 / total;
  if (pooled <= 0.0 || pooled >= 1.0) return {0.0, dof, 1.0};

  double statistic = 0.0;
  for (const ClickCounts& row : rows) {
    const double n = static_cast<double>(row.total());
    const double e1 = n * pooled;
    const double e2 = n * (1.0 - pooled);
    const double d1 = static_cast<double>(row.n1) - e1;
    const double d2 = static_cast<double>(row.n2) - e2;
    statistic += d1 * d1 / e1 + d2 * d2 / e2;
  }
  const boost::math::chi_squared distribution(dof);
  return {statistic, dof, boost::math::cdf(boost::math::complement(distribution, statistic))};
}

}  // namespace mzinfo
