#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "thyp/cover.hpp"
#include "thyp/errors.hpp"

using namespace thyp;

namespace {

ProjectiveMatrix pm(const Matrix2& m) { return ProjectiveMatrix::from_matrix(m); }

CoverElement random_element(std::mt19937_64& rng, int max_index = 3) {
  int k = std::uniform_int_distribution<int>(-max_index, max_index)(rng);
  return {pm(oracle::random_sl(rng)), k};
}

}  // namespace

TEST_CASE("angle_lift examples") {
  CHECK(angle_lift(pm(identity_matrix()), 0.7) == doctest::Approx(0.7));
  CHECK(angle_lift(pm(rotation(1.1)), 0.3) == doctest::Approx(1.4));
  CHECK(angle_lift(pm(diagonal(std::log(2.0))), kPi / 4) == doctest::Approx(std::atan(0.25)).epsilon(1e-12));
}

TEST_CASE("angle_lift matches tracked lift") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    Matrix2 m = oracle::random_sl(rng, 2.5);
    double x = oracle::uniform(rng, -4, 4);
    CHECK(angle_lift(pm(m), x) == doctest::Approx(oracle::tracked_lift(m, x)).epsilon(1e-7));
  }
}

TEST_CASE("delta_range matches dense sampling") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    Matrix2 m = oracle::random_sl(rng, 2.0);
    auto [lo, hi] = oracle::sampled_delta_range(m);
    DeltaRange r = delta_range({pm(m), 0});
    CHECK(r.lo() == doctest::Approx(lo).epsilon(1e-6));
    CHECK(r.hi() == doctest::Approx(hi).epsilon(1e-6));
  }
}

TEST_CASE("cover_mul examples") {
  auto x = cover_mul({pm(rotation(0.5)), 0}, {pm(rotation(1.2)), 0});
  CHECK(x.lift_index == 0);
  CHECK(projective_distance(x.base, rotation(1.7)) < 1e-12);
  auto zz = cover_mul(central(1), central(1));
  CHECK(cover_classify(zz) == center(2));
  auto a = special_lift(pm(upper_unipotent(1)), LiftMode::ClosureHyp0);
  auto b = special_lift(pm(lower_unipotent(-5)), LiftMode::ClosureHyp0);
  CHECK(cover_classify(cover_mul(a, b)) == hyp(1));
  auto c = special_lift(pm(lower_unipotent(5)), LiftMode::ClosureHyp0);
  CHECK(cover_classify(cover_mul(a, c)) == hyp(0));
}

TEST_CASE("cover_mul agrees with composition of tracked lifts") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto x = random_element(rng), y = random_element(rng);
    auto xy = cover_mul(x, y);
    for (double t : {0.0, 0.9, -2.1}) {
      double expect = oracle::tracked_cover(x, oracle::tracked_cover(y, t));
      CHECK(oracle::tracked_cover(xy, t) == doctest::Approx(expect).epsilon(1e-6));
    }
  }
}

TEST_CASE("cover group laws") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    auto x = random_element(rng), y = random_element(rng), w = random_element(rng);
    CHECK(cover_equal(cover_mul(cover_mul(x, y), w), cover_mul(x, cover_mul(y, w)), 1e-8));
    auto e = cover_mul(x, cover_inv(x));
    CHECK(e.lift_index == 0);
    CHECK(is_identity(e.base));
    CHECK(cover_equal(cover_mul(x, central(1)), cover_mul(central(1), x)));
  }
  CHECK(cover_classify(cover_inv(central(1))) == center(-1));
}

TEST_CASE("cover_classify examples") {
  for (double t : {0.2, 1.5, 3.0}) {
    CHECK(cover_classify({pm(rotation(t)), 0}) == ell(1));
    CHECK(cover_classify({pm(rotation(t)), -1}) == ell(-1));
    CHECK(cover_classify({pm(rotation(t)), 2}) == ell(3));
    CHECK(cover_classify({pm(rotation(t)), -3}) == ell(-3));
  }
  CHECK(cover_classify({pm(diagonal(1.0)), 0}) == hyp(0));
  CHECK(cover_classify({pm(upper_unipotent(1)), 2}) == par_plus(2));
  CHECK(cover_classify({pm(lower_unipotent(2)), 0}) == par_minus(1));
  CoverElement h{pm(upper_unipotent(1) * lower_unipotent(-5)), 0};
  REQUIRE(cover_classify(h) == hyp(1));
  CHECK(cover_classify(cover_inv(h)) == hyp(-1));
}

TEST_CASE("classes shift by z and invert") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    auto x = random_element(rng);
    CoverClass c = cover_classify(x);
    int m = std::uniform_int_distribution<int>(-3, 3)(rng);
    CHECK(cover_classify(cover_mul(central(m), x)) == shift(c, m));
    CoverClass ci = cover_classify(cover_inv(x));
    if (c.tag == CoverTag::Hyp || c.tag == CoverTag::Ell) CHECK(ci == CoverClass{c.tag, -c.n});
  }
  CoverElement p{pm(upper_unipotent(1)), 0};
  for (int n = -2; n <= 2; ++n) {
    CHECK(cover_classify(cover_inv(cover_mul(central(n), p))) == par_minus(-n));
  }
}

TEST_CASE("pgl flip mirrors classes") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto x = random_element(rng);
    CHECK(cover_classify(pgl_flip(x)) == mirror(cover_classify(x)));
  }
  CHECK(cover_classify(pgl_flip({pm(upper_unipotent(1)), 0})) == par_minus(0));
}

TEST_CASE("special_lift") {
  auto d = special_lift(pm(diagonal(std::log(2.0))), LiftMode::ClosureHyp0);
  CHECK(cover_classify(d) == hyp(0));
  auto r = special_lift(pm(rotation(2.0)), LiftMode::Eval);
  CHECK(cover_classify(r) == ell(1));
  CHECK_THROWS_AS(special_lift(pm(rotation(2.0)), LiftMode::ClosureHyp0), Error);
  CHECK(cover_classify(special_lift(pm(lower_unipotent(2)), LiftMode::ClosureHyp0)) == par_minus(0));
  CHECK(cover_classify(lift_to_class(pm(rotation(2.0)), ell(-2))) == ell(-2));
}

TEST_CASE("sl projection") {
  CHECK(max_abs_diff(sl_projection(central(1)), -identity_matrix()) == 0);
  CHECK(max_abs_diff(sl_projection(central(2)), identity_matrix()) == 0);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    auto x = random_element(rng), y = random_element(rng);
    Matrix2 lhs = sl_projection(cover_mul(x, y));
    Matrix2 rhs = sl_projection(x) * sl_projection(y);
    CHECK(max_abs_diff(lhs, rhs) < 1e-8 * std::max(1.0, rhs.max_abs()));
  }
  // Hyp(1) elements have negative SL trace.
  CoverElement h{pm(upper_unipotent(1) * lower_unipotent(-5)), 0};
  CHECK(sl_projection(h).trace() == doctest::Approx(-3));
}
