#include "thyp/cover.hpp"

#include <cmath>
#include <regex>

#include "thyp/errors.hpp"

namespace thyp {

namespace {

// Shifted slightly below zero so that lifts of near-identity maps stay near 0.
constexpr double kWindowSlack = 1e-11;
constexpr double kRoundingGuard = 1e-6;
constexpr double kTouchGuard = 1e-9;

double wrap_window(double x) { return x - kPi * std::floor((x + kWindowSlack) / kPi); }

struct Kak {
  double sigma;  // largest singular value
  double theta;  // right rotation angle
  double psi;    // centre of delta modulo pi
};

Kak kak(const Matrix2& m) {
  double e = (m.a11 + m.a22) / 2, f = (m.a11 - m.a22) / 2;
  double g = (m.a21 + m.a12) / 2, h = (m.a21 - m.a12) / 2;
  double a1 = std::atan2(g, f), a2 = std::atan2(h, e);
  return {std::hypot(e, h) + std::hypot(f, g), (a2 - a1) / 2, -a2};
}

// Increasing lift of the diagonal action u -> angle of (sigma cos u, -sin u / sigma).
double stretch(double sigma, double u) {
  double n = std::round(u / kPi);
  double w = u - n * kPi;
  return n * kPi + std::atan2(std::sin(w) / sigma, sigma * std::max(0.0, std::cos(w)));
}

struct Geometry {
  Kak k;
  double c0;  // centre of delta for the canonical lift
  double g0;
};

Geometry geometry(const ProjectiveMatrix& p) {
  Kak k = kak(p.rep());
  double g0 = lift_at_zero(p);
  double raw = k.psi + stretch(k.sigma, -k.theta) + k.theta;
  double c0 = k.psi + kPi * std::round((g0 - raw) / kPi);
  return {k, c0, g0};
}

double half_width(double sigma) { return std::max(0.0, 2 * std::atan(sigma) - kPi / 2); }

int round_int(double x) { return static_cast<int>(std::lround(x)); }

// Elliptic classes are numbered ..., -2, -1, 1, 2, ...; m counts the multiples of pi below delta.
int ell_to_slot(int n) { return n > 0 ? n - 1 : n; }
int slot_to_ell(int m) { return m >= 0 ? m + 1 : m; }

CoverClass classify_unchecked(const CoverElement& x);

void check_calibration() {
  static const bool ok = [] {
    CoverElement plus{ProjectiveMatrix::from_matrix(upper_unipotent(1)), 0};
    CoverElement rot{ProjectiveMatrix::from_matrix(rotation(1.0)), 0};
    return classify_unchecked(plus) == par_plus(0) && classify_unchecked(rot) == ell(1);
  }();
  if (!ok) throw Error(ErrorCode::SelfVerificationFailed, "orientation calibration failed");
}

}  // namespace

std::string CoverClass::to_string() const {
  std::string idx = "(" + std::to_string(n) + ")";
  switch (tag) {
    case CoverTag::Hyp: return "Hyp" + idx;
    case CoverTag::ParPlus: return "ParPlus" + idx;
    case CoverTag::ParMinus: return "ParMinus" + idx;
    case CoverTag::Ell: return "Ell" + idx;
    case CoverTag::Center: return "Center" + idx;
  }
  return "?";
}

CoverClass hyp(int n) { return {CoverTag::Hyp, n}; }
CoverClass par_plus(int n) { return {CoverTag::ParPlus, n}; }
CoverClass par_minus(int n) { return {CoverTag::ParMinus, n}; }
CoverClass ell(int n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Ell(0) does not exist");
  return {CoverTag::Ell, n};
}
CoverClass center(int n) { return {CoverTag::Center, n}; }

CoverClass mirror(const CoverClass& c) {
  switch (c.tag) {
    case CoverTag::ParPlus: return par_minus(-c.n);
    case CoverTag::ParMinus: return par_plus(-c.n);
    default: return {c.tag, -c.n};
  }
}

CoverClass shift(const CoverClass& c, int m) {
  if (c.tag == CoverTag::Ell) return ell(slot_to_ell(ell_to_slot(c.n) + m));
  return {c.tag, c.n + m};
}

CoverClass parse_cover_class(const std::string& s) {
  static const std::regex re(R"(\s*(Hyp|ParPlus|ParMinus|Ell|Center)\s*\(\s*([+-]?\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Error(ErrorCode::ParseError, "cover class '" + s + "'");
  int n = std::stoi(m[2]);
  std::string t = m[1];
  if (t == "Hyp") return hyp(n);
  if (t == "ParPlus") return par_plus(n);
  if (t == "ParMinus") return par_minus(n);
  if (t == "Ell") return ell(n);
  return center(n);
}

double lift_at_zero(const ProjectiveMatrix& p) {
  const Matrix2& m = p.rep();
  return wrap_window(std::atan2(-m.a21, m.a11));
}

double angle_lift(const ProjectiveMatrix& p, double x) {
  Geometry g = geometry(p);
  double u = x - g.k.theta;
  return x + g.c0 + stretch(g.k.sigma, u) - u;
}

double angle_lift(const CoverElement& x, double t) {
  return angle_lift(x.base, t) + static_cast<double>(x.lift_index) * kPi;
}

DeltaRange delta_range(const CoverElement& x) {
  Geometry g = geometry(x.base);
  return {g.c0 + static_cast<double>(x.lift_index) * kPi, half_width(g.k.sigma)};
}

CoverElement cover_identity() { return {ProjectiveMatrix::from_matrix(identity_matrix()), 0}; }
CoverElement central(std::int64_t n) { return {ProjectiveMatrix::from_matrix(identity_matrix()), n}; }

CoverElement cover_mul(const CoverElement& x, const CoverElement& y) {
  ProjectiveMatrix base = x.base * y.base;
  double r = (angle_lift(x.base, lift_at_zero(y.base)) - lift_at_zero(base)) / kPi;
  double d = std::round(r);
  if (std::abs(r - d) >= kRoundingGuard) {
    throw Error(ErrorCode::IndexRoundingUnstable, "residual " + std::to_string(r - d));
  }
  return {base, x.lift_index + y.lift_index + static_cast<std::int64_t>(d)};
}

CoverElement cover_inv(const CoverElement& x) {
  ProjectiveMatrix base = x.base.inverse();
  double r = angle_lift(x.base, lift_at_zero(base)) / kPi;
  double d = std::round(r);
  if (std::abs(r - d) >= kRoundingGuard) {
    throw Error(ErrorCode::IndexRoundingUnstable, "inverse residual " + std::to_string(r - d));
  }
  return {base, -x.lift_index - static_cast<std::int64_t>(d)};
}

CoverElement cover_commutator(const CoverElement& x, const CoverElement& y) {
  return cover_mul(cover_mul(x, y), cover_mul(cover_inv(x), cover_inv(y)));
}

CoverElement pgl_flip(const CoverElement& x) {
  ProjectiveMatrix base = x.base.flipped();
  double g = lift_at_zero(x.base) + static_cast<double>(x.lift_index) * kPi;
  double k = std::round((-g - lift_at_zero(base)) / kPi);
  return {base, static_cast<std::int64_t>(k)};
}

bool cover_equal(const CoverElement& x, const CoverElement& y, double tol) {
  return x.lift_index == y.lift_index && projective_distance(x.base, y.base) < tol;
}

CoverClass cover_classify(const CoverElement& x) {
  check_calibration();
  return classify_unchecked(x);
}

namespace {

CoverClass classify_unchecked(const CoverElement& x) {
  DeltaRange r = delta_range(x);
  PslType type = classify_psl(x.base);
  switch (type) {
    case PslType::Identity:
      return center(round_int(r.center / kPi));
    case PslType::Hyperbolic: {
      int n = round_int(r.center / kPi);
      if (n * kPi - r.lo() < kTouchGuard || r.hi() - n * kPi < kTouchGuard) {
        throw Error(ErrorCode::DegenerateRange, "hyperbolic range does not straddle n*pi");
      }
      return hyp(n);
    }
    case PslType::ParabolicPlus:
    case PslType::ParabolicMinus: {
      int nlo = round_int(r.lo() / kPi), nhi = round_int(r.hi() / kPi);
      double dlo = std::abs(r.lo() - nlo * kPi), dhi = std::abs(r.hi() - nhi * kPi);
      return dlo <= dhi ? par_plus(nlo) : par_minus(nhi);
    }
    case PslType::Elliptic: {
      int m = static_cast<int>(std::floor(r.lo() / kPi));
      if (r.lo() - m * kPi < kTouchGuard || (m + 1) * kPi - r.hi() < kTouchGuard) {
        throw Error(ErrorCode::DegenerateRange, "elliptic range touches a multiple of pi");
      }
      return ell(slot_to_ell(m));
    }
  }
  throw Error(ErrorCode::DegenerateRange, "unclassifiable");
}

}  // namespace

CoverElement special_lift(const ProjectiveMatrix& p, LiftMode mode) {
  CoverClass c = cover_classify({p, 0});
  if (c.tag == CoverTag::Ell) {
    if (mode == LiftMode::ClosureHyp0) {
      throw Error(ErrorCode::EllipticHasNoHyp0Lift, "elliptic base");
    }
    return {p, -ell_to_slot(c.n)};
  }
  return {p, -c.n};
}

CoverElement lift_to_class(const ProjectiveMatrix& p, const CoverClass& cls) {
  CoverClass c = cover_classify({p, 0});
  if (c.tag != cls.tag) {
    throw Error(ErrorCode::NotConjugate, "base has class " + c.to_string() + ", wanted " + cls.to_string());
  }
  int k = cls.tag == CoverTag::Ell ? ell_to_slot(cls.n) - ell_to_slot(c.n) : cls.n - c.n;
  return {p, k};
}

Matrix2 sl_projection(const CoverElement& x) {
  const Matrix2& m = x.base.rep();
  double full = std::atan2(-m.a21, m.a11);
  double g = lift_at_zero(x.base) + static_cast<double>(x.lift_index) * kPi;
  long long n = std::llround((g - full) / kPi);
  return (n % 2 == 0) ? m : -m;
}

}  // namespace thyp
