#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mzinfo/probability.hpp"
#include "mzinfo/setup.hpp"

namespace mzinfo {

// ---------------------------------------------------------------------------
// Statistical distance on two-outcome distributions.
//
// Line element: ds^2 = sum_i (d sqrt(P_i))^2. With P1 = f(x) this gives
//   (ds/dx)^2 = f'^2 / (4 f (1 - f)).
// The constant-metric rule fixes |f'| / sqrt(f (1 - f)) = k, which is
// 2 ds/dx. Both quantities are exposed under separate names so the factor of
// two never has to be reconstructed at a call site.
// ---------------------------------------------------------------------------

/// (ds/dx)^2 = f'^2 / (4 f (1 - f)). Requires f in (0, 1); throws DomainError
/// at the boundary, where the expression is 0/0.
double metric_density(double f, double fprime);

/// ds/dx, the information speed along x.
double information_speed(double f, double fprime);

/// |f'| / sqrt(f (1 - f)) = 2 ds/dx. Constant (= k) under the equal a priori rule.
double constant_metric_ratio(double f, double fprime);

/// Geodesic (Bhattacharyya) angle between the points sqrt(P) on the unit
/// circle: arccos(sqrt(p1 q1) + sqrt(p2 q2)), in [0, pi/2].
double statistical_distance(const ProbabilityPair& a, const ProbabilityPair& b);

/// ds/dx at one point of a fringe.
struct MetricSample {
  double x;
  double speed;
};

// ---------------------------------------------------------------------------
// Fringe laws
// ---------------------------------------------------------------------------

/// Sign of the cosine term; Plus gives f(0) = 1, Minus gives f(0) = 0.
enum class FringeSign { Plus, Minus };

std::string to_string(FringeSign sign);
FringeSign parse_fringe_sign(const std::string& text);
FringeSign opposite(FringeSign sign) noexcept;

/// Sign of the detector-1 law implied by a labeling convention.
FringeSign sign_for(DetectorLabeling labeling) noexcept;

/// f(x) = (1 +/- cos kx) / 2.
class FringeLaw {
 public:
  /// Throws DomainError when k is negative or not finite.
  FringeLaw(double k, FringeSign sign);

  double k() const noexcept { return k_; }
  FringeSign sign() const noexcept { return sign_; }

  /// f(x) = P1(x).
  double evaluate(double x) const noexcept;
  /// df/dx.
  double derivative(double x) const noexcept;
  /// (P1, P2) at x, each component computed directly from cos kx.
  ProbabilityPair distribution(double x) const;
  /// ds/dx at x; k/2 away from the turning points.
  MetricSample metric_sample(double x) const;

 private:
  double k_;
  FringeSign sign_;
};

/// Closed-form solution of the constant-metric rule. k = 0 gives the constant
/// law 1 (Plus) or 0 (Minus).
FringeLaw closed_form_fringe(double k, FringeSign sign);

/// Numerical solution of the constant-metric rule on a grid starting at x = 0.
struct FringeTable {
  std::vector<double> xs;
  std::vector<double> fs;
  double k = 0.0;
  int f0 = 1;
  double step = 0.0;

  /// Largest |fs[i] - law(xs[i])|.
  double sup_norm_deviation(const FringeLaw& law) const;
};

/// Writes `# k=... f0=... step=...`, a header row `x,f`, and one row per grid point.
void write_fringe_table_csv(std::ostream& out, const FringeTable& table);

/// Integrates df/dx = s k sqrt(f (1 - f)) from f(0) = f0 on [0, x_max].
///
/// The right-hand side is not Lipschitz at f in {0, 1}, where the constant
/// solution also satisfies the equation. The non-constant branch is selected
/// by following the local series solution
/// f = (k e)^2/4 - (k e)^4/48 + (k e)^6/1440 (mirrored at the upper boundary)
/// within a window of max(step, kSeriesWindow / k) on either side of each
/// boundary contact. Between contacts the equation is integrated with
/// classical RK4 and s flips at every contact. A contact is declared when f
/// comes within kContactTolerance of a boundary or when the series estimate
/// of the distance to the boundary falls inside the window.
///
/// Throws DomainError for k <= 0, step <= 0, x_max < step, or f0 not in {0, 1}.
FringeTable constant_metric_ode_solve(double k, int f0, double x_max, double step);

inline constexpr double kContactTolerance = 1e-9;
/// Half-width of the series region around a contact, in units of k x. RK4 on
/// the square-root right-hand side loses accuracy closer to the boundary.
inline constexpr double kSeriesWindow = 0.2;

// ---------------------------------------------------------------------------
// Inference rules
// ---------------------------------------------------------------------------

/// Open arms: the arm lengths carry no information about the click, so the
/// symmetric distribution is assigned for every (r1, r2). Throws DomainError on
/// negative lengths.
ProbabilityPair setup1_inference(double r1, double r2);

/// Outcome of selecting the fringe wavenumber from the preparation.
struct KSelection {
  enum class Kind { Deterministic, Identified, Free };

  Kind kind;
  /// 0 for Deterministic, p for Identified, empty for Free.
  std::optional<double> k;
};

std::string to_string(KSelection::Kind kind);

/// None -> Deterministic(0); MomentumFixed -> Identified(p); FreeParameter -> Free.
KSelection choose_k(const SetupConfig& config);

/// Detector-1 law of a Recombined setup from choose_k and the labeling, or
/// empty when k is free. Throws DomainError for OpenArms, which has no fringe.
std::optional<FringeLaw> inferred_law(const SetupConfig& config);

/// Distribution predicted for the configured path difference. Throws
/// DomainError for a Recombined setup with a free k.
ProbabilityPair inferred_distribution(const SetupConfig& config);

// ---------------------------------------------------------------------------
// Reparametrization study
// ---------------------------------------------------------------------------

/// Strictly monotone coordinate change y(x) with y(0) = 0.
struct Reparametrization {
  std::string name;
  std::function<double(double)> forward;
  std::function<double(double)> inverse;

  static Reparametrization identity();
  static Reparametrization square_root();
  static Reparametrization square();
};

/// Closed interval of x on which a reparametrized law is evaluated.
struct Interval {
  double lo;
  double hi;
};

/// The constant-metric rule applied in the y coordinate, read back as a
/// function of x: x -> (1 +/- cos(k y(x))) / 2.
class ReparametrizedFringe {
 public:
  ReparametrizedFringe(Reparametrization transform, FringeLaw law_in_y, Interval domain);

  /// Throws DomainError for x outside the domain.
  double evaluate(double x) const;

  const Reparametrization& transform() const noexcept { return transform_; }
  Interval domain() const noexcept { return domain_; }

 private:
  Reparametrization transform_;
  FringeLaw law_in_y_;
  Interval domain_;
};

/// Checks y(0) = 0, strict monotonicity and inverse consistency on `domain`
/// at `checks` sample points; throws DomainError if any fails.
ReparametrizedFringe reparametrized_fringe(const Reparametrization& transform, double k,
                                           FringeSign sign, Interval domain, int checks = 1000);

}  // namespace mzinfo
