#include "mzinfo/probability.hpp"

#include <cmath>
#include <sstream>

#include "mzinfo/errors.hpp"

namespace mzinfo {

ProbabilityPair::ProbabilityPair(double p1, double p2) : p1_(p1), p2_(p2) {
  const auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(p1) || !in_unit(p2) || std::abs(p1 + p2 - 1.0) > kNormalizationTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "not a normalized two-outcome distribution: (" << p1 << ", " << p2 << ")";
    throw DomainError(msg.str());
  }
}

double ProbabilityPair::operator[](int index) const {
  switch (index) {
    case 1:
      return p1_;
    case 2:
      return p2_;
    default:
      throw DomainError("detector index must be 1 or 2, got " + std::to_string(index));
  }
}

}  // namespace mzinfo
