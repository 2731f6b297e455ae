#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mzinfo/info_geometry.hpp"
#include "mzinfo/probability.hpp"
#include "mzinfo/setup.hpp"
#include "mzinfo/statistics.hpp"

namespace mzinfo {

enum class Detector : int { One = 1, Two = 2 };

/// One single-particle trial: exactly one detector clicks.
struct ClickRecord {
  std::uint64_t trial_id;
  double x;
  SetupKind setup;
  Detector outcome;
  /// True when the setup for this trial was picked per trial by a choice policy.
  bool delayed_choice = false;

  friend bool operator==(const ClickRecord&, const ClickRecord&) = default;
};

struct TrialOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
  bool keep_records = false;
};

struct TrialRun {
  ClickCounts counts;
  /// Ordered by trial_id; empty unless TrialOptions::keep_records.
  std::vector<ClickRecord> records;
};

/// Detector for trial `trial_id`: detector 1 iff the Click-stream deviate for
/// (seed, trial_id) is below P1.
Detector sample_click(const ProbabilityPair& distribution, std::uint64_t seed,
                      std::uint64_t trial_id) noexcept;

/// Distribution a configuration generates clicks from. OpenArms -> (1/2, 1/2);
/// Recombined with None or MomentumFixed -> the inferred fringe law (k = 0 or
/// k = p); Recombined with FreeParameter -> the amplitude oracle, standing in
/// for nature with its k unknown to the experimenter.
ProbabilityPair click_distribution(const SetupConfig& config);

/// n trials of `config` at its path difference. Throws DomainError for n = 0.
TrialRun run_trials(const SetupConfig& config, std::uint64_t n, std::uint64_t seed,
                    const TrialOptions& options = {});

/// n trials of a Recombined setup whose detector-1 probability is `law(x)`.
TrialRun run_trials(const FringeLaw& law, double x, std::uint64_t n, std::uint64_t seed,
                    const TrialOptions& options = {});

// ---------------------------------------------------------------------------
// Fitting k
// ---------------------------------------------------------------------------

/// Aggregated clicks at one path difference.
struct FitPoint {
  double x;
  std::uint64_t n1;
  std::uint64_t n2;
};

inline constexpr double kLikelihoodFloor = 1e-12;
inline constexpr double kTieTolerance = 1e-9;

struct FitOptions {
  /// Upper end of the scan; defaults to pi / (smallest gap between distinct x).
  std::optional<double> k_max;
  /// Grid size for the coarse scan; 0 chooses one from k_max and the x span.
  std::size_t grid_points = 0;
};

struct KEstimate {
  double k_hat;
  double log_likelihood;
  /// 1 / sqrt(observed information); +inf when the curvature is not negative.
  double stderr_k;
  /// Another refined peak lies within kTieTolerance of the best one.
  bool multimodal;
  double k_max;
};

/// L(k) = sum_j n1_j log f(x_j; k) + n2_j log(1 - f(x_j; k)), with both
/// probabilities clamped below at kLikelihoodFloor.
double log_likelihood(std::span<const FitPoint> data, double k, FringeSign sign);

/// Maximum-likelihood k >= 0: coarse grid scan over [0, k_max], then
/// golden-section refinement of every grid local maximum. Refined peaks within kTieTolerance go
/// to the smallest k and set `multimodal`.
///
/// Throws DomainError for empty data or a point with no trials, and
/// NonIdentifiableError when fewer than two distinct x values are present.
KEstimate fit_k(std::span<const FitPoint> data, FringeSign sign, const FitOptions& options = {});

// ---------------------------------------------------------------------------
// Delayed choice
// ---------------------------------------------------------------------------

/// Per-trial rule choosing the setup; a pure function of (trial_id, seed).
struct ChoicePolicy {
  enum class Kind { AlwaysOpen, AlwaysRecombined, FairCoin };

  Kind kind = Kind::FairCoin;
  std::uint64_t seed = 0;

  SetupKind choose(std::uint64_t trial_id) const noexcept;

  /// "open", "recombined" or "coin"; throws DomainError otherwise.
  static ChoicePolicy parse(std::string_view name, std::uint64_t seed);
};

std::string_view to_string(ChoicePolicy::Kind kind) noexcept;

struct DelayedChoiceRun {
  std::vector<ClickRecord> records;
  ClickCounts open_counts;
  ClickCounts recombined_counts;
};

/// Each trial draws its setup from `policy`, then a click from that setup's
/// distribution using the same click deviate run_trials would use.
DelayedChoiceRun delayed_choice_run(const SetupConfig& base, std::uint64_t n, std::uint64_t seed,
                                    const ChoicePolicy& policy);

/// Statistical distance between two empirical distributions. Throws
/// DomainError when either side has no trials.
double empirical_statistical_distance(const ClickCounts& a, const ClickCounts& b);

}  // namespace mzinfo
