#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

namespace {

double raw_angle(const Matrix2& m, double x) {
  double v1 = std::cos(x), v2 = -std::sin(x);
  double w1 = m.a11 * v1 + m.a12 * v2, w2 = m.a21 * v1 + m.a22 * v2;
  return std::atan2(-w2, w1);
}

double nearest_rep(double a, double target) {
  return a + thyp::kPi * std::round((target - a) / thyp::kPi);
}

}  // namespace

double tracked_lift(const Matrix2& m, double x, int steps_per_radian) {
  double g = std::fmod(raw_angle(m, 0.0) + 2 * thyp::kPi, thyp::kPi);
  if (g > thyp::kPi - 1e-11) g -= thyp::kPi;
  int steps = std::max(1, static_cast<int>(std::abs(x) * steps_per_radian));
  for (int i = 1; i <= steps; ++i) {
    double t = x * i / steps;
    g = nearest_rep(raw_angle(m, t), g);
  }
  return g;
}

double tracked_cover(const thyp::CoverElement& e, double x) {
  return tracked_lift(e.base.rep(), x) + static_cast<double>(e.lift_index) * thyp::kPi;
}

std::pair<double, double> sampled_delta_range(const Matrix2& m, int samples) {
  double g = tracked_lift(m, 0.0);
  double lo = g, hi = g;
  for (int i = 1; i <= samples; ++i) {
    double t = thyp::kPi * i / samples;
    g = nearest_rep(raw_angle(m, t), g);
    lo = std::min(lo, g - t);
    hi = std::max(hi, g - t);
  }
  return {lo, hi};
}

double uniform(std::mt19937_64& rng, double a, double b) {
  return a + (b - a) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

Matrix2 random_sl(std::mt19937_64& rng, double max_stretch) {
  double t1 = uniform(rng, 0, 2 * thyp::kPi), t2 = uniform(rng, 0, 2 * thyp::kPi);
  double l = uniform(rng, 0, max_stretch);
  return thyp::rotation(t1) * thyp::diagonal(l) * thyp::rotation(t2);
}

namespace {

using Map = std::function<double(double)>;

Map lifted(const Matrix2& m, double shift) {
  return [m, shift](double x) { return tracked_lift(m, x, 2000) + shift; };
}

// A lift of m together with its inverse lift.
std::pair<Map, Map> lift_pair(const Matrix2& m) {
  Map f = lifted(m, 0);
  Matrix2 inv = m.inverse_unimodular();
  double back = tracked_lift(m, tracked_lift(inv, 0.0, 2000), 2000);
  double k = std::round(-back / thyp::kPi);
  return {f, lifted(inv, k * thyp::kPi)};
}

}  // namespace

double tracked_euler(const thyp::Representation& rep) {
  const auto& s = rep.surface();
  std::vector<Map> factors;  // applied right to left
  for (int j = 1; j <= s.genus; ++j) {
    auto [a, ai] = lift_pair(rep.image({'a', j}).rep());
    auto [b, bi] = lift_pair(rep.image({'b', j}).rep());
    factors.insert(factors.end(), {a, b, ai, bi});
  }
  for (int i = 1; i <= s.punctures; ++i) {
    Matrix2 c = rep.peripheral(i).rep();
    auto [lo, hi] = sampled_delta_range(c, 4000);
    double k = std::round(0.5 * (lo + hi) / thyp::kPi);
    factors.push_back(lifted(c, -k * thyp::kPi));
  }
  double x = 0;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) x = (*it)(x);
  return x / thyp::kPi;
}

}  // namespace oracle
