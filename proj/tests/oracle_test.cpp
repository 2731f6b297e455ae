#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mzinfo/errors.hpp"
#include "mzinfo/oracle.hpp"
#include "oracles.hpp"

namespace mzinfo::oracle {
namespace {

constexpr double kTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void ExpectAmplitude(Amplitude actual, Amplitude expected) {
  EXPECT_NEAR(actual.real(), expected.real(), kTol);
  EXPECT_NEAR(actual.imag(), expected.imag(), kTol);
}

TEST(BeamSplitter, BasisInput) {
  const ModeState out = apply_beam_splitter(ModeState::basis(1));
  ExpectAmplitude(out.a1(), {kInvSqrt2, 0.0});
  ExpectAmplitude(out.a2(), {0.0, kInvSqrt2});
}

TEST(BeamSplitter, TwiceSendsModeOneToModeTwo) {
  const ModeState out = apply_beam_splitter(ModeState({kInvSqrt2, 0.0}, {0.0, kInvSqrt2}));
  ExpectAmplitude(out.a1(), {0.0, 0.0});
  ExpectAmplitude(out.a2(), {0.0, 1.0});
}

TEST(BeamSplitter, EqualRealAmplitudes) {
  const ModeState out = apply_beam_splitter(ModeState({kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}));
  ExpectAmplitude(out.a1(), {0.5, 0.5});
  ExpectAmplitude(out.a2(), {0.5, 0.5});
}

TEST(ModeStateTest, RejectsUnnormalized) {
  EXPECT_THROW(ModeState(1.0, 1.0), InvalidStateError);
  EXPECT_THROW(ModeState(0.0, 0.0), InvalidStateError);
  EXPECT_THROW(ModeState(1.0 + 1e-8, 0.0), InvalidStateError);
  EXPECT_NO_THROW(ModeState(1.0 + 1e-10, 0.0));
  EXPECT_THROW(ModeState::basis(3), DomainError);
}

TEST(PropagatePhases, ZeroMomentumIsIdentity) {
  const ModeState out = propagate_phases(ModeState::basis(1), 3.7, 11.0, 0.0);
  ExpectAmplitude(out.a1(), {1.0, 0.0});
  ExpectAmplitude(out.a2(), {0.0, 0.0});
}

TEST(PropagatePhases, HalfTurnOnArmOne) {
  const ModeState in({kInvSqrt2, 0.0}, {0.0, kInvSqrt2});
  const ModeState out = propagate_phases(in, std::numbers::pi, 0.0, 1.0);
  ExpectAmplitude(out.a1(), {-kInvSqrt2, 0.0});
  ExpectAmplitude(out.a2(), {0.0, kInvSqrt2});
}

TEST(PropagatePhases, RejectsNonFinite) {
  EXPECT_THROW(propagate_phases(ModeState::basis(1), NAN, 0.0, 1.0), DomainError);
}

TEST(PropagatePhases, PreservesNormForRandomStates) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(-50.0, 50.0);
  for (int i = 0; i < 100; ++i) {
    Amplitude a1{normal(gen), normal(gen)}, a2{normal(gen), normal(gen)};
    const double norm = std::sqrt(std::norm(a1) + std::norm(a2));
    const ModeState in(a1 / norm, a2 / norm);
    const ModeState out = propagate_phases(in, uniform(gen), uniform(gen), uniform(gen));
    EXPECT_NEAR(out.squared_norm(), in.squared_norm(), kTol);
    EXPECT_NEAR(apply_beam_splitter(out).squared_norm(), 1.0, kTol);
  }
}

SetupConfig Recombined(double r1, double r2, double p) {
  SetupConfig c;
  c.kind = SetupKind::Recombined;
  c.r1 = r1;
  c.r2 = r2;
  c.p = p;
  return c;
}

TEST(DetectionProbabilities, ZeroPathDifferenceIsBright) {
  const ProbabilityPair pair = detection_probabilities(Recombined(2.5, 2.5, 4.0));
  EXPECT_NEAR(pair.p1(), 1.0, kTol);
  EXPECT_NEAR(pair.p2(), 0.0, kTol);
}

TEST(DetectionProbabilities, HalfWaveDifferenceIsDark) {
  const ProbabilityPair pair = detection_probabilities(Recombined(std::numbers::pi, 0.0, 1.0));
  EXPECT_NEAR(pair.p1(), 0.0, kTol);
  EXPECT_NEAR(pair.p2(), 1.0, kTol);
}

TEST(DetectionProbabilities, OpenArmsExactlyHalf) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int i = 0; i < 100; ++i) {
    SetupConfig c = Recombined(u(gen), u(gen), u(gen));
    c.kind = SetupKind::OpenArms;
    const ProbabilityPair pair = detection_probabilities(c);
    EXPECT_EQ(pair.p1(), 0.5);
    EXPECT_EQ(pair.p2(), 0.5);
  }
}

TEST(DetectionProbabilities, FlippedLabelingSwapsDetectors) {
  SetupConfig c = Recombined(1.0, 0.3, 2.0);
  const ProbabilityPair normal = detection_probabilities(c);
  c.labeling = DetectorLabeling::BrightIsDetector2;
  const ProbabilityPair flipped = detection_probabilities(c);
  EXPECT_EQ(normal.p1(), flipped.p2());
  EXPECT_EQ(normal.p2(), flipped.p1());
}

TEST(DetectionProbabilities, RejectsNegativeLengths) {
  EXPECT_THROW(detection_probabilities(Recombined(-1.0, 0.0, 1.0)), DomainError);
}

// Properties over random configurations.
TEST(DetectionProbabilities, MatchesCosineLawEvenAndPeriodic) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> length(0.0, 10.0);
  std::uniform_real_distribution<double> momentum(0.0, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const double r1 = length(gen), r2 = length(gen), p = momentum(gen);
    const ProbabilityPair pair = detection_probabilities(Recombined(r1, r2, p));
    const double c = std::cos(p * (r1 - r2));
    EXPECT_NEAR(pair.p1(), 0.5 * (1.0 + c), kTol);
    EXPECT_NEAR(pair.p2(), 0.5 * (1.0 - c), kTol);
    EXPECT_NEAR(pair.p1() + pair.p2(), 1.0, kTol);
    // Textbook form with a Hadamard-type splitter, as a second reference.
    EXPECT_NEAR(pair.p1(), testing::mz_bright(p * r1, p * r2), kTol);

    const ProbabilityPair swapped = detection_probabilities(Recombined(r2, r1, p));
    EXPECT_NEAR(swapped.p1(), pair.p1(), kTol);
    if (p > 0.1) {
      const ProbabilityPair shifted =
          detection_probabilities(Recombined(r1 + 2.0 * std::numbers::pi / p, r2, p));
      EXPECT_NEAR(shifted.p1(), pair.p1(), kTol);
    }
    const ModeState out = recombined_output(r1, r2, p);
    EXPECT_NEAR(out.squared_norm(), 1.0, kTol);
  }
}

}  // namespace
}  // namespace mzinfo::oracle
