#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "thyp/errors.hpp"
#include "thyp/mobius.hpp"

using namespace thyp;

namespace {

ProjectiveMatrix pm(double a, double b, double c, double d) {
  return ProjectiveMatrix::from_matrix({a, b, c, d});
}

// Trace of the SL commutator; independent of sign choices.
double commutator_trace(const Matrix2& a, const Matrix2& b) {
  return (a * b * a.inverse_unimodular() * b.inverse_unimodular()).trace();
}

}  // namespace

TEST_CASE("normalize picks the sign-canonical representative") {
  CHECK(max_abs_diff(pm(-1, 0, 0, -1).rep(), identity_matrix()) == 0);
  Matrix2 m = pm(0, -2, 0.5, 0).rep();
  CHECK(max_abs_diff(m, {0, 2, -0.5, 0}) == 0);
  CHECK_THROWS_AS(pm(1, 0, 0, 2), Error);
  try {
    pm(1, 0, 0, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUnitDeterminant);
  }
  CHECK_THROWS_AS(pm(0, 1, 1, 0), Error);
}

TEST_CASE("classify_psl") {
  CHECK(classify_psl(pm(1, 1, 0, 1)) == PslType::ParabolicPlus);
  CHECK(classify_psl(pm(1, 0, 2, 1)) == PslType::ParabolicMinus);
  CHECK(classify_psl(pm(1, 0, -5, 1)) == PslType::ParabolicPlus);
  CHECK(classify_psl(pm(-1, -1, 0, -1)) == PslType::ParabolicPlus);
  CHECK(classify_psl(pm(2, 0, 0, 0.5)) == PslType::Hyperbolic);
  CHECK(classify_psl(ProjectiveMatrix::from_matrix(rotation(kPi / 3))) == PslType::Elliptic);
  CHECK(classify_psl(pm(1, 0, 0, 1)) == PslType::Identity);
}

TEST_CASE("fixed_directions") {
  auto d = fixed_directions(pm(2, 0, 0, 0.5));
  REQUIRE(d.angles.size() == 2);
  CHECK(d.angles[0] == doctest::Approx(0));
  CHECK(d.angles[1] == doctest::Approx(kPi / 2));
  auto p = fixed_directions(pm(1, 1, 0, 1));
  REQUIRE(p.angles.size() == 1);
  CHECK(p.angles[0] == doctest::Approx(0));
  CHECK(fixed_directions(ProjectiveMatrix::from_matrix(rotation(kPi / 3))).angles.empty());
  CHECK(fixed_directions(pm(1, 0, 0, 1)).all);
}

TEST_CASE("fixed directions are fixed") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto p = ProjectiveMatrix::from_matrix(oracle::random_sl(rng));
    if (classify_psl(p) != PslType::Hyperbolic) continue;
    for (double x : fixed_directions(p).angles) {
      const Matrix2& m = p.rep();
      double w1 = m.a11 * std::cos(x) - m.a12 * std::sin(x);
      double w2 = m.a21 * std::cos(x) - m.a22 * std::sin(x);
      double gap = std::abs(direction_angle(w1, w2) - x);
      CHECK(std::min(gap, kPi - gap) < 1e-9);
    }
  }
}

TEST_CASE("axes_cross agrees with the commutator trace") {
  Matrix2 a = diagonal(std::log(2.0));
  Matrix2 b = rotation(kPi / 4) * a * rotation(-kPi / 4);
  CHECK(axes_cross(ProjectiveMatrix::from_matrix(a), ProjectiveMatrix::from_matrix(b)));
  CHECK(commutator_trace(a, b) < 2);

  // Hyperbolic element with fixed directions 0.1 and 0.3.
  Matrix2 f{std::cos(0.3), std::cos(0.1), -std::sin(0.3), -std::sin(0.1)};
  double s = 1 / std::sqrt(f.det());
  f = f.scaled(s);
  Matrix2 c = f * diagonal(std::log(3.0)) * f.inverse_unimodular();
  auto fc = fixed_directions(ProjectiveMatrix::from_matrix(c)).angles;
  CHECK(fc[0] == doctest::Approx(0.1));
  CHECK(fc[1] == doctest::Approx(0.3));
  CHECK_FALSE(axes_cross(ProjectiveMatrix::from_matrix(a), ProjectiveMatrix::from_matrix(c)));
  CHECK(commutator_trace(a, c) >= 2);

  CHECK_FALSE(axes_cross(ProjectiveMatrix::from_matrix(a), ProjectiveMatrix::from_matrix(a)));
  CHECK_THROWS_AS(axes_cross(pm(1, 1, 0, 1), ProjectiveMatrix::from_matrix(a)), Error);

  std::mt19937_64 rng(5);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    auto p = ProjectiveMatrix::from_matrix(oracle::random_sl(rng));
    auto q = ProjectiveMatrix::from_matrix(oracle::random_sl(rng));
    if (classify_psl(p) != PslType::Hyperbolic || classify_psl(q) != PslType::Hyperbolic) continue;
    double t = commutator_trace(p.rep(), q.rep());
    if (std::abs(t - 2) < 1e-6) continue;
    CHECK(axes_cross(p, q) == (t < 2));
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("conjugator") {
  auto a = pm(2, 0, 0, 0.5);
  auto g = conjugator(a, a);
  CHECK(projective_distance(g * a * g.inverse(), a) < 1e-12);

  auto r = ProjectiveMatrix::from_matrix(rotation(kPi / 4));
  auto b = r * a * r.inverse();
  auto h = conjugator(a, b);
  CHECK(projective_distance(h * a * h.inverse(), b) < 1e-12);

  CHECK_THROWS_AS(conjugator(a, pm(3, 0, 0, 1.0 / 3)), Error);
  CHECK_THROWS_AS(conjugator(pm(1, 1, 0, 1), pm(1, -1, 0, 1)), Error);
  CHECK_THROWS_AS(conjugator(ProjectiveMatrix::from_matrix(rotation(0.4)),
                             ProjectiveMatrix::from_matrix(rotation(-0.4))),
                  Error);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    auto p = ProjectiveMatrix::from_matrix(oracle::random_sl(rng));
    auto k = ProjectiveMatrix::from_matrix(oracle::random_sl(rng));
    auto q = k * p * k.inverse();
    auto c = conjugator(p, q);
    CHECK(projective_distance(c * p * c.inverse(), q) < 1e-8);
  }
  for (double s : {1.0, -1.0}) {
    auto p = pm(1, s, 0, 1);
    for (int i = 0; i < 200; ++i) {
      auto k = ProjectiveMatrix::from_matrix(oracle::random_sl(rng));
      auto q = k * p * k.inverse();
      auto c = conjugator(p, q);
      CHECK(projective_distance(c * p * c.inverse(), q) < 1e-8);
    }
  }
}
