#pragma once

#include <cmath>
#include <concepts>

namespace mzinfo {

template <typename T>
struct ScalarOptimum {
  T x;
  T value;
};

/// Golden-section search for the maximum of a unimodal `f` on [a, b].
/// Stops when the bracket is narrower than `tolerance` or after
/// `max_iterations`. The endpoints are compared too, so a maximum sitting on
/// the boundary of the bracket is returned as is.
template <std::floating_point T, typename F>
  requires std::invocable<F, T>
ScalarOptimum<T> golden_section_maximize(F&& f, T a, T b, T tolerance, int max_iterations = 200) {
  const T inv_phi = (std::sqrt(T(5)) - T(1)) / T(2);

  T fa = f(a);
  T fb = f(b);
  ScalarOptimum<T> best = fa >= fb ? ScalarOptimum<T>{a, fa} : ScalarOptimum<T>{b, fb};

  T u = b - inv_phi * (b - a);
  T v = a + inv_phi * (b - a);
  T fu = f(u);
  T fv = f(v);
  for (int i = 0; i < max_iterations && std::abs(b - a) > tolerance; ++i) {
    if (fu >= fv) {
      b = v;
      v = u;
      fv = fu;
      u = b - inv_phi * (b - a);
      fu = f(u);
    } else {
      a = u;
      u = v;
      fu = fv;
      v = a + inv_phi * (b - a);
      fv = f(v);
    }
  }
  const ScalarOptimum<T> inner = fu >= fv ? ScalarOptimum<T>{u, fu} : ScalarOptimum<T>{v, fv};
  if (inner.value > best.value || (inner.value == best.value && inner.x < best.x)) best = inner;
  return best;
}

}  // namespace mzinfo
