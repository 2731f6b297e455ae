#pragma once

#include <complex>

#include "mzinfo/probability.hpp"
#include "mzinfo/setup.hpp"

// Standard two-mode amplitude model of the interferometer. It is kept free of
// any dependency on the information-geometric code so that it can serve as an
// independent reference for it.
namespace mzinfo::oracle {

using Amplitude = std::complex<double>;

/// Inputs whose squared norm deviates from 1 by more than this are rejected.
inline constexpr double kStateTolerance = 1e-9;

/// Two complex mode amplitudes with |a1|^2 + |a2|^2 = 1.
class ModeState {
 public:
  /// Throws InvalidStateError when the state is not normalized.
  ModeState(Amplitude a1, Amplitude a2);

  /// Particle entering along arm `mode` (1 or 2).
  static ModeState basis(int mode);

  Amplitude a1() const noexcept { return a1_; }
  Amplitude a2() const noexcept { return a2_; }
  double squared_norm() const noexcept { return std::norm(a1_) + std::norm(a2_); }

 private:
  Amplitude a1_;
  Amplitude a2_;
};

/// Symmetric 50/50 beam splitter B = (1/sqrt 2) [[1, i], [i, 1]].
ModeState apply_beam_splitter(const ModeState& state);

/// Free propagation: (a1, a2) -> (exp(i p r1) a1, exp(i p r2) a2).
ModeState propagate_phases(const ModeState& state, double r1, double r2, double p);

/// Output amplitudes of the recombined interferometer for a particle entering
/// mode 1: beam splitter, arm phases, beam splitter. Mode 2 is the port that
/// is bright at r1 = r2.
ModeState recombined_output(double r1, double r2, double p);

/// Click distribution of the setup. OpenArms gives (1/2, 1/2) exactly.
/// Recombined runs the full amplitude pipeline and reports the bright port as
/// detector 1 unless the labeling is flipped.
ProbabilityPair detection_probabilities(const SetupConfig& config);

}  // namespace mzinfo::oracle
