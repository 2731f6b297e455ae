#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mzinfo/errors.hpp"
#include "mzinfo/formats.hpp"

namespace mzinfo::formats {
namespace {

TEST(FormatDouble, RoundTrips) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(gen);
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(2.0), "2");
}

TEST(ClickCsv, RoundTrip) {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::vector<ClickRecord> records;
  for (std::uint64_t t = 0; t < 500; ++t) {
    records.push_back({t, u(gen), t % 3 == 0 ? SetupKind::OpenArms : SetupKind::Recombined,
                       t % 2 == 0 ? Detector::One : Detector::Two, t % 5 == 0});
  }
  std::ostringstream out;
  write_manifest(out, {{"command", "test"}});
  write_click_csv(out, records);
  std::istringstream in(out.str());
  EXPECT_EQ(read_click_csv(in), records);
}

TEST(ClickCsv, ParseErrorsNameTheLine) {
  std::istringstream in("trial_id,setup,x,outcome,choice\n0,open,1.0,1,0\n1,open,1.0,3,0\n");
  try {
    read_click_csv(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream bad_x("trial_id,setup,x,outcome,choice\n0,open,abc,1,0\n");
  EXPECT_THROW(read_click_csv(bad_x), ParseError);
  std::istringstream bad_header("a,b\n");
  EXPECT_THROW(read_click_csv(bad_header), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(read_click_csv(empty), ParseError);
}

TEST(FitPointsCsv, AggregatesClickLog) {
  std::istringstream in(
      "# command: simulate\n"
      "trial_id,setup,x,outcome,choice\n"
      "0,recombined,0.5,1,0\n"
      "1,recombined,0.5,2,0\n"
      "2,open,0.5,1,1\n"
      "3,recombined,1.5,1,0\n");
  const auto points = read_fit_points_csv(in);
  ASSERT_EQ(points.size(), 2u);
  EXPECT_EQ(points[0].x, 0.5);
  EXPECT_EQ(points[0].n1, 1u);
  EXPECT_EQ(points[0].n2, 1u);
  EXPECT_EQ(points[1].n1, 1u);
}

TEST(FitPointsCsv, ScanTable) {
  std::istringstream in("x,P1_theory,n1,n2\n0,1,10,0\n1.5,0.2,3,7\n");
  const auto points = read_fit_points_csv(in);
  ASSERT_EQ(points.size(), 2u);
  EXPECT_EQ(points[1].x, 1.5);
  EXPECT_EQ(points[1].n2, 7u);

  std::istringstream short_row("x,n1,n2\n0,1\n");
  EXPECT_THROW(read_fit_points_csv(short_row), ParseError);
  std::istringstream no_columns("x,y\n0,1\n");
  EXPECT_THROW(read_fit_points_csv(no_columns), ParseError);
  std::istringstream negative("x,n1,n2\n0,-1,2\n");
  EXPECT_THROW(read_fit_points_csv(negative), ParseError);
}

TEST(FitReport, RoundTrip) {
  std::ostringstream out;
  write_fit_report(out, {2.0, -12.5, 0.001, true, 19.0});
  std::istringstream in(out.str());
  const auto values = read_key_values(in);
  EXPECT_EQ(values.at("k_hat"), "2");
  EXPECT_EQ(values.at("stderr"), "0.001");
  EXPECT_EQ(values.at("multimodal"), "1");
}

}  // namespace
}  // namespace mzinfo::formats
