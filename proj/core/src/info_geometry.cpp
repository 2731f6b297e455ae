#include "mzinfo/info_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "mzinfo/errors.hpp"

namespace mzinfo {

namespace {

std::string describe(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

void require_interior(double f) {
  if (!(f > 0.0 && f < 1.0)) {
    throw DomainError("metric is singular at f = " + describe(f) +
                      "; use the boundary expansion for f in {0, 1}");
  }
}

}  // namespace

double metric_density(double f, double fprime) {
  require_interior(f);
  return fprime * fprime / (4.0 * f * (1.0 - f));
}

double information_speed(double f, double fprime) {
  require_interior(f);
  return std::abs(fprime) / (2.0 * std::sqrt(f * (1.0 - f)));
}

double constant_metric_ratio(double f, double fprime) {
  require_interior(f);
  return std::abs(fprime) / std::sqrt(f * (1.0 - f));
}

double statistical_distance(const ProbabilityPair& a, const ProbabilityPair& b) {
  // Angle between u = sqrt(a) and v = sqrt(b) on the unit circle, computed as
  // 2 atan2(|u - v|, |u + v|); arccos of the overlap loses half the digits
  // for nearby distributions.
  const double u1 = std::sqrt(a.p1()), u2 = std::sqrt(a.p2());
  const double v1 = std::sqrt(b.p1()), v2 = std::sqrt(b.p2());
  const double diff = std::hypot(u1 - v1, u2 - v2);
  const double sum = std::hypot(u1 + v1, u2 + v2);
  return 2.0 * std::atan2(diff, sum);
}

// --- fringe laws -----------------------------------------------------------

std::string to_string(FringeSign sign) { return sign == FringeSign::Plus ? "plus" : "minus"; }

FringeSign parse_fringe_sign(const std::string& text) {
  if (text == "plus" || text == "+") return FringeSign::Plus;
  if (text == "minus" || text == "-") return FringeSign::Minus;
  throw DomainError("unknown fringe sign '" + text + "'");
}

FringeSign opposite(FringeSign sign) noexcept {
  return sign == FringeSign::Plus ? FringeSign::Minus : FringeSign::Plus;
}

FringeSign sign_for(DetectorLabeling labeling) noexcept {
  return labeling == DetectorLabeling::BrightIsDetector1 ? FringeSign::Plus : FringeSign::Minus;
}

FringeLaw::FringeLaw(double k, FringeSign sign) : k_(k), sign_(sign) {
  if (!std::isfinite(k) || k < 0.0) {
    throw DomainError("fringe wavenumber must be finite and >= 0, got " + describe(k));
  }
}

double FringeLaw::evaluate(double x) const noexcept {
  const double c = std::cos(k_ * x);
  return sign_ == FringeSign::Plus ? 0.5 * (1.0 + c) : 0.5 * (1.0 - c);
}

double FringeLaw::derivative(double x) const noexcept {
  const double d = -0.5 * k_ * std::sin(k_ * x);
  return sign_ == FringeSign::Plus ? d : -d;
}

ProbabilityPair FringeLaw::distribution(double x) const {
  const double c = std::cos(k_ * x);
  const double bright = 0.5 * (1.0 + c);
  const double dark = 0.5 * (1.0 - c);
  // Sums to 1 within one ulp, well inside the pair's tolerance.
  return sign_ == FringeSign::Plus ? ProbabilityPair(bright, dark) : ProbabilityPair(dark, bright);
}

MetricSample FringeLaw::metric_sample(double x) const {
  return {x, information_speed(evaluate(x), derivative(x))};
}

FringeLaw closed_form_fringe(double k, FringeSign sign) { return FringeLaw(k, sign); }

double FringeTable::sup_norm_deviation(const FringeLaw& law) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    worst = std::max(worst, std::abs(fs[i] - law.evaluate(xs[i])));
  }
  return worst;
}

void write_fringe_table_csv(std::ostream& out, const FringeTable& table) {
  const auto old_precision = out.precision(17);
  out << "# k=" << table.k << " f0=" << table.f0 << " step=" << table.step << '\n';
  out << "x,f\n";
  for (std::size_t i = 0; i < table.xs.size(); ++i) {
    out << table.xs[i] << ',' << table.fs[i] << '\n';
  }
  out.precision(old_precision);
}

// --- constant-metric ODE ---------------------------------------------------

namespace {

// Series solution of the ODE around a boundary contact, e = distance from the
// contact: f = (k e)^2/4 - (k e)^4/48 + (k e)^6/1440 at the lower boundary,
// mirrored at the upper one. Obtained by matching powers of e in
// f'^2 = k^2 f (1 - f).
double boundary_series(int boundary, double k, double e) {
  const double u = k * e;
  const double u2 = u * u;
  const double away = u2 / 4.0 - u2 * u2 / 48.0 + u2 * u2 * u2 / 1440.0;
  return boundary == 0 ? away : 1.0 - away;
}

// Inverse of the same series: distance to the boundary from a point whose
// distance in f is d.
double distance_to_contact(double k, double d) {
  return 2.0 / k * std::sqrt(d) * (1.0 + d / 6.0 + 3.0 * d * d / 40.0);
}

}  // namespace

FringeTable constant_metric_ode_solve(double k, int f0, double x_max, double step) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw DomainError("constant_metric_ode_solve needs k > 0, got " + describe(k) +
                      " (k = 0 is the constant law; use closed_form_fringe)");
  }
  if (!std::isfinite(step) || step <= 0.0) throw DomainError("step must be > 0");
  if (!std::isfinite(x_max) || x_max < step) throw DomainError("x_max must be >= step");
  if (f0 != 0 && f0 != 1) throw DomainError("f0 must be 0 or 1");

  FringeTable table;
  table.k = k;
  table.f0 = f0;
  table.step = step;

  const auto whole_steps = static_cast<std::size_t>(std::floor(x_max / step * (1.0 + 1e-12)));
  table.xs.reserve(whole_steps + 2);
  for (std::size_t i = 0; i <= whole_steps; ++i) table.xs.push_back(static_cast<double>(i) * step);
  if (x_max - table.xs.back() > 1e-12 * x_max) table.xs.push_back(x_max);
  table.fs.resize(table.xs.size());
  table.fs[0] = f0;

  const auto rhs = [k](double s, double f) {
    return s * k * std::sqrt(std::max(f * (1.0 - f), 0.0));
  };

  const double window = std::max(step, kSeriesWindow / k);

  // At a contact the drift sign points away from the boundary just touched.
  int boundary = f0;
  double contact_x = 0.0;
  double drift = f0 == 1 ? -1.0 : 1.0;
  bool leaving = true;

  for (std::size_t i = 1; i < table.xs.size(); ++i) {
    const double x = table.xs[i];
    const double x_prev = table.xs[i - 1];
    const double f_prev = table.fs[i - 1];

    if (!leaving) {
      const int target = drift < 0.0 ? 0 : 1;
      const double gap = target == 0 ? f_prev : 1.0 - f_prev;
      const double ahead = distance_to_contact(k, std::max(gap, 0.0));
      if (gap < kContactTolerance || ahead <= std::max(x - x_prev, window)) {
        boundary = target;
        contact_x = x_prev + ahead;
        drift = -drift;
        leaving = true;
      }
    }

    if (leaving) {
      const double e = x - contact_x;
      table.fs[i] = boundary_series(boundary, k, e);
      if (e >= window) leaving = false;
      continue;
    }

    const double h = x - x_prev;
    const double k1 = rhs(drift, f_prev);
    const double k2 = rhs(drift, f_prev + 0.5 * h * k1);
    const double k3 = rhs(drift, f_prev + 0.5 * h * k2);
    const double k4 = rhs(drift, f_prev + h * k3);
    table.fs[i] = std::clamp(f_prev + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4), 0.0, 1.0);
  }
  return table;
}

// --- inference rules -------------------------------------------------------

ProbabilityPair setup1_inference(double r1, double r2) {
  if (!std::isfinite(r1) || !std::isfinite(r2) || r1 < 0.0 || r2 < 0.0) {
    throw DomainError("arm lengths must be finite and >= 0");
  }
  return ProbabilityPair::uniform();
}

std::string to_string(KSelection::Kind kind) {
  switch (kind) {
    case KSelection::Kind::Deterministic:
      return "deterministic";
    case KSelection::Kind::Identified:
      return "identified";
    case KSelection::Kind::Free:
      return "free";
  }
  return "?";
}

KSelection choose_k(const SetupConfig& config) {
  config.validate();
  switch (config.scale) {
    case ScalePreparation::None:
      return {KSelection::Kind::Deterministic, 0.0};
    case ScalePreparation::MomentumFixed:
      return {KSelection::Kind::Identified, config.p};
    case ScalePreparation::FreeParameter:
      return {KSelection::Kind::Free, std::nullopt};
  }
  throw DomainError("invalid scale preparation");
}

std::optional<FringeLaw> inferred_law(const SetupConfig& config) {
  if (config.kind != SetupKind::Recombined) {
    throw DomainError("open arms carry no fringe law");
  }
  const KSelection selection = choose_k(config);
  if (!selection.k) return std::nullopt;
  return closed_form_fringe(*selection.k, sign_for(config.labeling));
}

ProbabilityPair inferred_distribution(const SetupConfig& config) {
  config.validate();
  if (config.kind == SetupKind::OpenArms) return setup1_inference(config.r1, config.r2);
  const auto law = inferred_law(config);
  if (!law) throw DomainError("k is a free parameter; fit it from data first");
  return law->distribution(config.path_difference());
}

// --- reparametrization -----------------------------------------------------

Reparametrization Reparametrization::identity() {
  return {"identity", [](double x) { return x; }, [](double y) { return y; }};
}

Reparametrization Reparametrization::square_root() {
  return {"sqrt", [](double x) { return std::sqrt(x); }, [](double y) { return y * y; }};
}

Reparametrization Reparametrization::square() {
  return {"square", [](double x) { return x * x; }, [](double y) { return std::sqrt(y); }};
}

ReparametrizedFringe::ReparametrizedFringe(Reparametrization transform, FringeLaw law_in_y,
                                           Interval domain)
    : transform_(std::move(transform)), law_in_y_(law_in_y), domain_(domain) {}

double ReparametrizedFringe::evaluate(double x) const {
  if (!(x >= domain_.lo && x <= domain_.hi)) {
    throw DomainError("x = " + describe(x) + " outside the reparametrization domain");
  }
  return law_in_y_.evaluate(transform_.forward(x));
}

ReparametrizedFringe reparametrized_fringe(const Reparametrization& transform, double k,
                                           FringeSign sign, Interval domain, int checks) {
  if (!transform.forward || !transform.inverse) throw DomainError("transform needs both directions");
  if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
    throw DomainError("reparametrization domain must be a finite, non-empty interval");
  }
  if (checks < 2) throw DomainError("need at least two check points");

  const double y0 = transform.forward(0.0);
  if (!(std::abs(y0) <= 1e-12)) throw DomainError("transform must map 0 to 0");

  double prev_y = transform.forward(domain.lo);
  double direction = 0.0;
  for (int i = 0; i <= checks; ++i) {
    const double x = domain.lo + (domain.hi - domain.lo) * i / checks;
    const double y = transform.forward(x);
    if (!std::isfinite(y)) throw DomainError("transform is not finite at x = " + describe(x));
    const double back = transform.inverse(y);
    if (!(std::abs(back - x) <= 1e-9 * std::max(1.0, std::abs(x)))) {
      throw DomainError(transform.name + " is not invertible at x = " + describe(x));
    }
    if (i > 0) {
      const double dy = y - prev_y;
      if (dy == 0.0 || (direction != 0.0 && (dy > 0.0) != (direction > 0.0))) {
        throw DomainError(transform.name + " is not strictly monotone on the domain");
      }
      direction = dy;
    }
    prev_y = y;
  }
  return ReparametrizedFringe(transform, closed_form_fringe(k, sign), domain);
}

}  // namespace mzinfo
