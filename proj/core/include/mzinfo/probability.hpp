#pragma once

namespace mzinfo {

inline constexpr double kNormalizationTolerance = 1e-12;

/// Normalized two-outcome distribution (P1, P2).
///
/// Both components are stored so that complementary laws can be evaluated
/// symmetrically (P2 is not recomputed as 1 - P1).
class ProbabilityPair {
 public:
  /// Throws DomainError unless both components lie in [0, 1] and sum to 1
  /// within kNormalizationTolerance.
  ProbabilityPair(double p1, double p2);

  static ProbabilityPair uniform() { return {0.5, 0.5}; }
  static ProbabilityPair from_p1(double p1) { return {p1, 1.0 - p1}; }

  double p1() const noexcept { return p1_; }
  double p2() const noexcept { return p2_; }

  /// Probability of detector `index` (1 or 2).
  double operator[](int index) const;

  /// Same distribution with detectors 1 and 2 exchanged.
  ProbabilityPair swapped() const noexcept { return ProbabilityPair(p2_, p1_, Unchecked{}); }

  friend bool operator==(const ProbabilityPair&, const ProbabilityPair&) = default;

 private:
  struct Unchecked {};
  ProbabilityPair(double p1, double p2, Unchecked) noexcept : p1_(p1), p2_(p2) {}

  double p1_;
  double p2_;
};

}  // namespace mzinfo
