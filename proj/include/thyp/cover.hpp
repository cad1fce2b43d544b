#pragma once

#include <cstdint>
#include <string>

#include "thyp/mobius.hpp"

namespace thyp {

/// Element of the universal cover of PSL(2,R).
///
/// Represents the lifted circle map G(x) = g(x) + lift_index * pi, where g is the
/// increasing lift of the base with g(0) in the canonical window [0, pi).
struct CoverElement {
  ProjectiveMatrix base;
  std::int64_t lift_index = 0;
};

enum class CoverTag { Hyp, ParPlus, ParMinus, Ell, Center };

struct CoverClass {
  CoverTag tag = CoverTag::Center;
  int n = 0;

  bool operator==(const CoverClass&) const = default;
  std::string to_string() const;
};

CoverClass hyp(int n);
CoverClass par_plus(int n);
CoverClass par_minus(int n);
CoverClass ell(int n);  // n != 0
CoverClass center(int n);

/// Image of the class under conjugation by diag(1,-1).
CoverClass mirror(const CoverClass& c);
/// Class of z^m x given the class of x.
CoverClass shift(const CoverClass& c, int m);
CoverClass parse_cover_class(const std::string& s);

/// Canonical value g(0) of the base's increasing lift.
double lift_at_zero(const ProjectiveMatrix& p);
/// g(x) for the canonical lift of p.
double angle_lift(const ProjectiveMatrix& p, double x);
double angle_lift(const CoverElement& x, double t);

/// delta(x) = G(x) - x ranges over [center - half_width, center + half_width].
struct DeltaRange {
  double center;
  double half_width;
  double lo() const { return center - half_width; }
  double hi() const { return center + half_width; }
};
DeltaRange delta_range(const CoverElement& x);

CoverElement cover_identity();
CoverElement central(std::int64_t n);  // z^n
CoverElement cover_mul(const CoverElement& x, const CoverElement& y);
CoverElement cover_inv(const CoverElement& x);
CoverElement cover_commutator(const CoverElement& x, const CoverElement& y);
CoverElement pgl_flip(const CoverElement& x);
bool cover_equal(const CoverElement& x, const CoverElement& y, double tol = 1e-8);

CoverClass cover_classify(const CoverElement& x);

enum class LiftMode { ClosureHyp0, Eval };
/// ClosureHyp0: the lift in Hyp(0), Par+-(0) or Center(0). Eval: same, but elliptic bases go to Ell(1).
CoverElement special_lift(const ProjectiveMatrix& p, LiftMode mode);
/// The lift of p realising the given class, if one exists.
CoverElement lift_to_class(const ProjectiveMatrix& p, const CoverClass& cls);

/// Image in SL(2,R) = cover / <z^2>.
Matrix2 sl_projection(const CoverElement& x);

}  // namespace thyp
