#pragma once

#include <string>
#include <string_view>

namespace mzinfo {

/// OpenArms: each click can be associated with a path (which-path setup).
/// Recombined: the two arms are mixed on a second beam splitter.
enum class SetupKind { OpenArms, Recombined };

/// What the preparation fixes as a length scale for the fringe wavenumber.
enum class ScalePreparation { None, MomentumFixed, FreeParameter };

/// Which physical output port is reported as detector 1. The default reports
/// the port that is bright at zero path difference as detector 1.
enum class DetectorLabeling { BrightIsDetector1, BrightIsDetector2 };

/// Experimental preparation. Lengths are in arbitrary user units and `p` is
/// the particle wavenumber in inverse units (hbar = 1).
struct SetupConfig {
  SetupKind kind = SetupKind::Recombined;
  double r1 = 0.0;
  double r2 = 0.0;
  double p = 0.0;
  ScalePreparation scale = ScalePreparation::MomentumFixed;
  DetectorLabeling labeling = DetectorLabeling::BrightIsDetector1;

  /// x = r1 - r2.
  double path_difference() const noexcept { return r1 - r2; }

  /// Throws DomainError for negative or non-finite lengths or momentum.
  void validate() const;
};

std::string_view to_string(SetupKind kind) noexcept;
std::string_view to_string(ScalePreparation scale) noexcept;
std::string_view to_string(DetectorLabeling labeling) noexcept;

// Parsers accept the names produced by to_string plus short CLI aliases
// ("open", "recombined", "none", "momentum", "free", "bright1", "bright2").
// They throw DomainError on unknown names.
SetupKind parse_setup_kind(std::string_view text);
ScalePreparation parse_scale_preparation(std::string_view text);
DetectorLabeling parse_detector_labeling(std::string_view text);

}  // namespace mzinfo
