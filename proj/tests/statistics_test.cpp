#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mzinfo/errors.hpp"
#include "mzinfo/golden_section.hpp"
#include "mzinfo/statistics.hpp"

namespace mzinfo {
namespace {

TEST(BinomialSigma, Values) {
  EXPECT_NEAR(binomial_sigma(0.75, 1'000'000), 4.330127018922193e-4, 1e-16);
  EXPECT_EQ(binomial_sigma(1.0, 10), 0.0);
}

TEST(ZScore, DegenerateSigma) {
  const EmpiricalPair all_one = empirical_distribution({10, 0});
  EXPECT_EQ(z_score(all_one, 1.0), 0.0);
  EXPECT_TRUE(std::isinf(z_score(empirical_distribution({9, 1}), 1.0)));
  EXPECT_NEAR(z_score(empirical_distribution({60, 40}), 0.5), 2.0, 1e-12);
}

TEST(Homogeneity, IdenticalRowsPass) {
  const std::vector<ClickCounts> rows{{500, 500}, {500, 500}, {500, 500}};
  const HomogeneityResult r = chi_squared_homogeneity(rows);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.degrees_of_freedom, 2);
  EXPECT_NEAR(r.p_value, 1.0, 1e-12);
}

TEST(Homogeneity, KnownStatistic) {
  // 2x2 table 30/70 vs 50/50: pooled 0.4, chi2 = 8.3333...
  const std::vector<ClickCounts> rows{{30, 70}, {50, 50}};
  const HomogeneityResult r = chi_squared_homogeneity(rows);
  EXPECT_NEAR(r.statistic, 25.0 / 3.0, 1e-12);
  EXPECT_EQ(r.degrees_of_freedom, 1);
  EXPECT_NEAR(r.p_value, std::erfc(std::sqrt(25.0 / 6.0)), 1e-12);
  EXPECT_FALSE(r.passes(0.99));
}

TEST(Homogeneity, DegenerateInputs) {
  EXPECT_THROW(chi_squared_homogeneity(std::vector<ClickCounts>{{1, 1}}), DomainError);
  EXPECT_THROW(chi_squared_homogeneity(std::vector<ClickCounts>{{1, 1}, {0, 0}}), DomainError);
  const HomogeneityResult r = chi_squared_homogeneity(std::vector<ClickCounts>{{5, 0}, {9, 0}});
  EXPECT_EQ(r.p_value, 1.0);
}

TEST(GoldenSection, Parabola) {
  const auto best = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, -2.0,
                                            2.0, 1e-10);
  EXPECT_NEAR(best.x, 0.3, 1e-8);
}

TEST(GoldenSection, MaximumAtEndpoint) {
  const auto best = golden_section_maximize([](double x) { return x; }, 0.0, 1.0, 1e-10);
  EXPECT_EQ(best.x, 1.0);
  EXPECT_EQ(best.value, 1.0);
}

}  // namespace
}  // namespace mzinfo
