#pragma once

// Brute-force reference computations, deliberately independent of the library's closed forms.

#include <random>

#include "thyp/cover.hpp"
#include "thyp/surface.hpp"

namespace oracle {

using thyp::Matrix2;

/// Continuous lift of x -> angle(M v(x)) tracked in small steps from x = 0.
double tracked_lift(const Matrix2& m, double x, int steps_per_radian = 4000);

/// Lifted map of a cover element evaluated by tracking.
double tracked_cover(const thyp::CoverElement& e, double x);

/// Extremes of tracked_lift(x) - x over one period, by dense sampling.
std::pair<double, double> sampled_delta_range(const Matrix2& m, int samples = 20000);

/// Random element of SL(2,R) with log-singular value up to max_stretch.
Matrix2 random_sl(std::mt19937_64& rng, double max_stretch = 2.0);

double uniform(std::mt19937_64& rng, double a, double b);

/// Relative Euler class from tracked circle maps: commutators of arbitrary lifts, peripheral
/// lifts shifted until their displacement range contains 0, relator evaluated at x = 0.
/// Returns the number of half-turns; the caller rounds.
double tracked_euler(const thyp::Representation& rep);

/// Root of f in [lo, hi] by plain bisection; f(lo) and f(hi) must differ in sign.
template <typename F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
