#include "mzinfo/trial_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "mzinfo/errors.hpp"
#include "mzinfo/golden_section.hpp"
#include "mzinfo/oracle.hpp"
#include "mzinfo/rng.hpp"

namespace mzinfo {

Detector sample_click(const ProbabilityPair& distribution, std::uint64_t seed,
                      std::uint64_t trial_id) noexcept {
  return rng::uniform(seed, rng::Stream::Click, trial_id) < distribution.p1() ? Detector::One
                                                                             : Detector::Two;
}

ProbabilityPair click_distribution(const SetupConfig& config) {
  config.validate();
  if (config.kind == SetupKind::OpenArms) return setup1_inference(config.r1, config.r2);
  if (const auto law = inferred_law(config)) return law->distribution(config.path_difference());
  return oracle::detection_probabilities(config);
}

namespace {

unsigned resolve_workers(unsigned requested, std::uint64_t n) {
  unsigned workers = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
}

// Trials [0, n) split into contiguous blocks, one per worker. The click of a
// trial depends only on (seed, trial_id), so the split never changes results.
TrialRun sample_trials(const ProbabilityPair& distribution, double x, SetupKind kind,
                       std::uint64_t n, std::uint64_t seed, const TrialOptions& options) {
  if (n == 0) throw DomainError("run_trials needs n >= 1");

  TrialRun run;
  if (options.keep_records) run.records.resize(n);

  const unsigned workers = resolve_workers(options.workers, n);
  std::vector<ClickCounts> partial(workers);
  const auto work = [&](unsigned w) {
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    ClickCounts counts;
    for (std::uint64_t t = begin; t < end; ++t) {
      const Detector d = sample_click(distribution, seed, t);
      (d == Detector::One ? counts.n1 : counts.n2) += 1;
      if (options.keep_records) run.records[t] = ClickRecord{t, x, kind, d, false};
    }
    partial[w] = counts;
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const ClickCounts& c : partial) run.counts += c;
  return run;
}

}  // namespace

TrialRun run_trials(const SetupConfig& config, std::uint64_t n, std::uint64_t seed,
                    const TrialOptions& options) {
  return sample_trials(click_distribution(config), config.path_difference(), config.kind, n, seed,
                       options);
}

TrialRun run_trials(const FringeLaw& law, double x, std::uint64_t n, std::uint64_t seed,
                    const TrialOptions& options) {
  return sample_trials(law.distribution(x), x, SetupKind::Recombined, n, seed, options);
}

// --- fit_k -----------------------------------------------------------------

double log_likelihood(std::span<const FitPoint> data, double k, FringeSign sign) {
  const FringeLaw law(k, sign);
  double total = 0.0;
  for (const FitPoint& point : data) {
    const ProbabilityPair pair = law.distribution(point.x);
    if (point.n1 > 0) {
      total += static_cast<double>(point.n1) * std::log(std::max(pair.p1(), kLikelihoodFloor));
    }
    if (point.n2 > 0) {
      total += static_cast<double>(point.n2) * std::log(std::max(pair.p2(), kLikelihoodFloor));
    }
  }
  return total;
}

namespace {

// -d2L/dk2 evaluated analytically.
double observed_information(std::span<const FitPoint> data, double k, FringeSign sign) {
  const double s = sign == FringeSign::Plus ? 1.0 : -1.0;
  double info = 0.0;
  for (const FitPoint& point : data) {
    const double x = point.x;
    const double c = std::cos(k * x);
    const double f = std::max(0.5 * (1.0 + s * c), kLikelihoodFloor);
    const double g = std::max(0.5 * (1.0 - s * c), kLikelihoodFloor);
    const double df = -s * 0.5 * x * std::sin(k * x);
    const double d2f = -s * 0.5 * x * x * c;
    const double n1 = static_cast<double>(point.n1);
    const double n2 = static_cast<double>(point.n2);
    double second = 0.0;
    if (point.n1 > 0) second += n1 * (d2f / f - df * df / (f * f));
    if (point.n2 > 0) second += n2 * (-d2f / g - df * df / (g * g));
    info -= second;
  }
  return info;
}

std::vector<double> distinct_sorted_x(std::span<const FitPoint> data) {
  std::vector<double> xs;
  xs.reserve(data.size());
  for (const FitPoint& point : data) xs.push_back(point.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

KEstimate fit_k(std::span<const FitPoint> data, FringeSign sign, const FitOptions& options) {
  if (data.empty()) throw DomainError("fit_k: no data");
  for (const FitPoint& point : data) {
    if (!std::isfinite(point.x)) throw DomainError("fit_k: non-finite path difference");
    if (point.n1 + point.n2 == 0) throw DomainError("fit_k: a data point has no trials");
  }
  const std::vector<double> xs = distinct_sorted_x(data);
  if (xs.size() < 2) {
    throw NonIdentifiableError("fit_k: all data at a single path difference; k is not identifiable");
  }

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < xs.size(); ++i) min_gap = std::min(min_gap, xs[i] - xs[i - 1]);
  const double k_max = options.k_max.value_or(std::numbers::pi / min_gap);
  if (!std::isfinite(k_max) || k_max <= 0.0) throw DomainError("fit_k: k_max must be > 0");

  const double span = std::max(std::abs(xs.front()), std::abs(xs.back()));
  std::size_t grid_points = options.grid_points;
  if (grid_points == 0) {
    // At least 64 samples per oscillation period 2 pi / span of L(k).
    const double periods = k_max * span / (2.0 * std::numbers::pi);
    grid_points = static_cast<std::size_t>(std::clamp(64.0 * periods, 2000.0, 1e6)) + 1;
  }
  if (grid_points < 3) throw DomainError("fit_k: grid needs at least 3 points");

  const double dk = k_max / static_cast<double>(grid_points - 1);
  std::vector<double> values(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    values[i] = log_likelihood(data, dk * static_cast<double>(i), sign);
  }
  const auto objective = [&](double k) { return log_likelihood(data, k, sign); };

  // Refine every grid local maximum; adjacent grid cells can hide peaks whose
  // heights differ by far more than the tie tolerance.
  std::vector<ScalarOptimum<double>> peaks;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const bool left_ok = i == 0 || values[i] >= values[i - 1];
    const bool right_ok = i + 1 == grid_points || values[i] >= values[i + 1];
    if (!left_ok || !right_ok) continue;
    // A run of equal neighbours counts once.
    if (i > 0 && values[i] == values[i - 1]) continue;
    const double lo = i == 0 ? 0.0 : dk * static_cast<double>(i - 1);
    const double hi = std::min(k_max, dk * static_cast<double>(i + 1));
    auto refined = golden_section_maximize(objective, lo, hi, 1e-12 * std::max(1.0, hi));
    const double grid_k = dk * static_cast<double>(i);
    if (values[i] > refined.value || (values[i] == refined.value && grid_k < refined.x)) {
      refined = {grid_k, values[i]};
    }
    peaks.push_back(refined);
  }

  double best_value = -std::numeric_limits<double>::infinity();
  for (const auto& peak : peaks) best_value = std::max(best_value, peak.value);
  std::vector<ScalarOptimum<double>> tied;
  for (const auto& peak : peaks) {
    if (peak.value < best_value - kTieTolerance) continue;
    if (!tied.empty() && peak.x - tied.back().x <= 2.0 * dk) continue;
    tied.push_back(peak);
  }
  const ScalarOptimum<double> refined = tied.front();

  const double info = observed_information(data, refined.x, sign);
  const double stderr_k =
      info > 0.0 ? 1.0 / std::sqrt(info) : std::numeric_limits<double>::infinity();
  return {refined.x, refined.value, stderr_k, tied.size() > 1, k_max};
}

// --- delayed choice --------------------------------------------------------

SetupKind ChoicePolicy::choose(std::uint64_t trial_id) const noexcept {
  switch (kind) {
    case Kind::AlwaysOpen:
      return SetupKind::OpenArms;
    case Kind::AlwaysRecombined:
      return SetupKind::Recombined;
    case Kind::FairCoin:
      break;
  }
  return rng::uniform(seed, rng::Stream::Choice, trial_id) < 0.5 ? SetupKind::Recombined
                                                                 : SetupKind::OpenArms;
}

ChoicePolicy ChoicePolicy::parse(std::string_view name, std::uint64_t seed) {
  if (name == "open") return {Kind::AlwaysOpen, seed};
  if (name == "recombined") return {Kind::AlwaysRecombined, seed};
  if (name == "coin" || name == "fair-coin") return {Kind::FairCoin, seed};
  throw DomainError("unknown choice policy '" + std::string(name) + "'");
}

std::string_view to_string(ChoicePolicy::Kind kind) noexcept {
  switch (kind) {
    case ChoicePolicy::Kind::AlwaysOpen:
      return "open";
    case ChoicePolicy::Kind::AlwaysRecombined:
      return "recombined";
    case ChoicePolicy::Kind::FairCoin:
      return "coin";
  }
  return "?";
}

DelayedChoiceRun delayed_choice_run(const SetupConfig& base, std::uint64_t n, std::uint64_t seed,
                                    const ChoicePolicy& policy) {
  if (n == 0) throw DomainError("delayed_choice_run needs n >= 1");
  SetupConfig open = base;
  open.kind = SetupKind::OpenArms;
  SetupConfig recombined = base;
  recombined.kind = SetupKind::Recombined;
  const ProbabilityPair open_law = click_distribution(open);
  const ProbabilityPair recombined_law = click_distribution(recombined);
  const double x = base.path_difference();

  DelayedChoiceRun run;
  run.records.reserve(n);
  for (std::uint64_t t = 0; t < n; ++t) {
    const SetupKind kind = policy.choose(t);
    const bool is_open = kind == SetupKind::OpenArms;
    const Detector d = sample_click(is_open ? open_law : recombined_law, seed, t);
    ClickCounts& counts = is_open ? run.open_counts : run.recombined_counts;
    (d == Detector::One ? counts.n1 : counts.n2) += 1;
    run.records.push_back(ClickRecord{t, x, kind, d, true});
  }
  return run;
}

double empirical_statistical_distance(const ClickCounts& a, const ClickCounts& b) {
  return statistical_distance(empirical_distribution(a).pair, empirical_distribution(b).pair);
}

}  // namespace mzinfo
