#include "mzinfo/setup.hpp"

#include <cmath>

#include "mzinfo/errors.hpp"

namespace mzinfo {

void SetupConfig::validate() const {
  const auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError(std::string(name) + " must be finite and >= 0, got " + std::to_string(v));
    }
  };
  check(r1, "r1");
  check(r2, "r2");
  check(p, "p");
}

std::string_view to_string(SetupKind kind) noexcept {
  return kind == SetupKind::OpenArms ? "open" : "recombined";
}

std::string_view to_string(ScalePreparation scale) noexcept {
  switch (scale) {
    case ScalePreparation::None:
      return "none";
    case ScalePreparation::MomentumFixed:
      return "momentum";
    case ScalePreparation::FreeParameter:
      return "free";
  }
  return "?";
}

std::string_view to_string(DetectorLabeling labeling) noexcept {
  return labeling == DetectorLabeling::BrightIsDetector1 ? "bright1" : "bright2";
}

SetupKind parse_setup_kind(std::string_view text) {
  if (text == "open" || text == "open-arms" || text == "setup1") return SetupKind::OpenArms;
  if (text == "recombined" || text == "setup2") return SetupKind::Recombined;
  throw DomainError("unknown setup kind '" + std::string(text) + "'");
}

ScalePreparation parse_scale_preparation(std::string_view text) {
  if (text == "none") return ScalePreparation::None;
  if (text == "momentum" || text == "momentum-fixed") return ScalePreparation::MomentumFixed;
  if (text == "free") return ScalePreparation::FreeParameter;
  throw DomainError("unknown scale preparation '" + std::string(text) + "'");
}

DetectorLabeling parse_detector_labeling(std::string_view text) {
  if (text == "bright1") return DetectorLabeling::BrightIsDetector1;
  if (text == "bright2") return DetectorLabeling::BrightIsDetector2;
  throw DomainError("unknown detector labeling '" + std::string(text) + "'");
}

}  // namespace mzinfo
