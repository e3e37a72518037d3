#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace vacfocus {

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootResult {
  double x = 0.0;
  int iterations = 0;
};

/// Bisection with secant refinement on a sign-changing bracket [lo, hi].
///
/// A secant step is only attempted when the previous step at least halved the
/// bracket, so the bracket shrinks by 2× every two evaluations in the worst
/// case. Stops when the bracket is narrower than tol, the function vanishes,
/// or the bracket cannot be split in floating point.
template <class F>
RootResult bracketed_root(F&& f, double lo, double hi, double tol = 1e-12,
                          int max_iterations = 400) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw BracketError("bracketed_root: no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  double prev_width = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < max_iterations; ++it) {
    const double width = std::abs(hi - lo);
    if (width <= tol) break;
    double x = 0.5 * (lo + hi);
    if (x == lo || x == hi) break;
    if (width <= 0.5 * prev_width) {
      const double s = hi - fhi * (hi - lo) / (fhi - flo);
      const double margin = 1e-3 * width;
      if (std::isfinite(s) && s > std::min(lo, hi) + margin && s < std::max(lo, hi) - margin) {
        x = s;
      }
    }
    prev_width = width;
    const double fx = f(x);
    if (fx == 0.0) return {x, it + 1};
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }
  // Closing secant step inside the converged bracket.
  double s = hi - fhi * (hi - lo) / (fhi - flo);
  if (!std::isfinite(s) || s < std::min(lo, hi) || s > std::max(lo, hi)) {
    s = 0.5 * (lo + hi);
  }
  return {s, it};
}

}  // namespace vacfocus
