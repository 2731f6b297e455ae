#include "mzinfo/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mzinfo/errors.hpp"

namespace mzinfo::oracle {

namespace {

constexpr Amplitude kI{0.0, 1.0};
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

ModeState::ModeState(Amplitude a1, Amplitude a2) : a1_(a1), a2_(a2) {
  const double n = squared_norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kStateTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "mode state is not normalized: |a1|^2 + |a2|^2 = " << n;
    throw InvalidStateError(msg.str());
  }
}

ModeState ModeState::basis(int mode) {
  switch (mode) {
    case 1:
      return {1.0, 0.0};
    case 2:
      return {0.0, 1.0};
    default:
      throw DomainError("mode must be 1 or 2");
  }
}

ModeState apply_beam_splitter(const ModeState& state) {
  const Amplitude a1 = state.a1();
  const Amplitude a2 = state.a2();
  return ModeState(kInvSqrt2 * (a1 + kI * a2), kInvSqrt2 * (kI * a1 + a2));
}

ModeState propagate_phases(const ModeState& state, double r1, double r2, double p) {
  if (!std::isfinite(r1) || !std::isfinite(r2) || !std::isfinite(p)) {
    throw DomainError("propagate_phases: lengths and wavenumber must be finite");
  }
  return ModeState(std::polar(1.0, p * r1) * state.a1(), std::polar(1.0, p * r2) * state.a2());
}

ModeState recombined_output(double r1, double r2, double p) {
  return apply_beam_splitter(propagate_phases(apply_beam_splitter(ModeState::basis(1)), r1, r2, p));
}

ProbabilityPair detection_probabilities(const SetupConfig& config) {
  config.validate();
  if (config.kind == SetupKind::OpenArms) return ProbabilityPair::uniform();

  const ModeState out = recombined_output(config.r1, config.r2, config.p);
  // Normalize the modulus squares so the pair sums to 1 to rounding.
  const double dark = std::norm(out.a1());
  const double bright = std::norm(out.a2());
  const double total = dark + bright;
  const ProbabilityPair pair(bright / total, dark / total);
  return config.labeling == DetectorLabeling::BrightIsDetector1 ? pair : pair.swapped();
}

}  // namespace mzinfo::oracle
