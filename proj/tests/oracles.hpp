#pragma once

// Reference computations used only by tests. None of them call into the
// library code they are used to check.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace mzinfo::testing {

/// f(x) = (1 + s cos kx) / 2 with s = +1 or -1.
inline double fringe(double k, double s, double x) { return 0.5 * (1.0 + s * std::cos(k * x)); }

/// Line element of sum_i (d sqrt P_i)^2 along x, from central differences of
/// sqrt(P_i(x)) rather than any closed-form metric.
inline double line_element_speed(const std::function<double(double)>& p1, double x,
                                 double h = 1e-5) {
  const auto root_slope = [&](const std::function<double(double)>& p) {
    return (std::sqrt(p(x + h)) - std::sqrt(p(x - h))) / (2.0 * h);
  };
  const double d1 = root_slope(p1);
  const double d2 = root_slope([&](double t) { return 1.0 - p1(t); });
  return std::sqrt(d1 * d1 + d2 * d2);
}

/// Composite 5-point Gauss-Legendre quadrature on [a, b]; never evaluates at
/// the endpoints, where the two-outcome metric is singular.
inline double gauss_legendre(const std::function<double(double)>& g, double a, double b,
                             int panels) {
  static constexpr std::array<double, 5> nodes{0.0, -0.5384693101056831, 0.5384693101056831,
                                               -0.9061798459386640, 0.9061798459386640};
  static constexpr std::array<double, 5> weights{0.5688888888888889, 0.4786286704993665,
                                                 0.4786286704993665, 0.2369268850561891,
                                                 0.2369268850561891};
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      total += weights[i] * g(mid + 0.5 * width * nodes[i]);
    }
  }
  return 0.5 * width * total;
}

struct CountsAt {
  double x;
  std::uint64_t n1;
  std::uint64_t n2;
};

/// Binomial log-likelihood of the fringe law, floor 1e-12, written out directly.
inline double brute_log_likelihood(const std::vector<CountsAt>& data, double k, double s) {
  double total = 0.0;
  for (const CountsAt& d : data) {
    const double c = std::cos(k * d.x);
    const double f = std::max(0.5 * (1.0 + s * c), 1e-12);
    const double g = std::max(0.5 * (1.0 - s * c), 1e-12);
    if (d.n1 > 0) total += static_cast<double>(d.n1) * std::log(f);
    if (d.n2 > 0) total += static_cast<double>(d.n2) * std::log(g);
  }
  return total;
}

/// Argmax of the likelihood over `points` equally spaced k in [0, k_max].
inline double brute_force_argmax(const std::vector<CountsAt>& data, double s, double k_max,
                                 int points) {
  double best_k = 0.0;
  double best = -INFINITY;
  for (int i = 0; i < points; ++i) {
    const double k = k_max * i / (points - 1);
    const double value = brute_log_likelihood(data, k, s);
    if (value > best) {
      best = value;
      best_k = k;
    }
  }
  return best_k;
}

/// Textbook Mach-Zehnder bright-port probability with a Hadamard-type
/// splitter: |(e^{i phi1} + e^{i phi2}) / 2|^2.
inline double mz_bright(double phi1, double phi2) {
  const std::complex<double> a = 0.5 * (std::polar(1.0, phi1) + std::polar(1.0, phi2));
  return std::norm(a);
}

/// |p_hat - p| <= sigmas * sqrt(p (1 - p) / n).
inline bool within_sigmas(double p_hat, double p, std::uint64_t n, double sigmas) {
  return std::abs(p_hat - p) <= sigmas * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace mzinfo::testing
