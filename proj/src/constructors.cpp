#include "thyp/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <iomanip>
#include <sstream>

#include "thyp/errors.hpp"

namespace thyp {

namespace {

constexpr double kTraceTol = 1e-12;
constexpr double kMaxFactorEntry = 1e3;
constexpr int kSolveAttempts = 300;
constexpr int kScanPoints = 360;

bool is_par_kind(FactorKind k) { return k == FactorKind::ParPlus0 || k == FactorKind::ParMinus0; }
bool is_ell_kind(FactorKind k) { return k == FactorKind::Ell1 || k == FactorKind::EllMinus1; }
int par_sign(FactorKind k) { return k == FactorKind::ParPlus0 ? 1 : -1; }

ProjectiveMatrix pm(const Matrix2& m) { return ProjectiveMatrix::renormalize(m); }

bool parabolic_class(const CoverClass& c) { return c.tag == CoverTag::ParPlus || c.tag == CoverTag::ParMinus; }

// Random hyperbolic element with trace in [lo, hi] and a random axis.
ProjectiveMatrix random_hyperbolic(Rng& rng, double lo = 2.5, double hi = 6.0) {
  double t = uniform(rng, lo, hi);
  double lambda = std::acosh(t / 2);
  Matrix2 h = rotation(uniform(rng, 0, kPi)) * diagonal(uniform(rng, -0.5, 0.5));
  return pm(h * diagonal(lambda) * h.inverse_unimodular());
}

ProjectiveMatrix random_parabolic(Rng& rng, int sign) {
  Matrix2 h = rotation(uniform(rng, 0, kPi)) * diagonal(uniform(rng, -0.5, 0.5));
  return pm(h * upper_unipotent(sign) * h.inverse_unimodular());
}

// Element of the centraliser of a hyperbolic or parabolic p conjugating the pair (a, b) to
// nearly minimal total size; alpha I + beta P has unit determinant on the branch through I.
ProjectiveMatrix settling_centralizer(const ProjectiveMatrix& p, const ProjectiveMatrix& a, const ProjectiveMatrix& b,
                                      Rng& rng) {
  double jitter = uniform(rng, -0.2, 0.2);
  PslType type = classify_psl(p);
  if (type != PslType::Hyperbolic && !is_parabolic(type)) return pm(identity_matrix());
  Matrix2 t = p.rep();
  double tr = t.trace();
  auto element = [&](double u) {
    double beta = std::sinh(u);
    double alpha = (-beta * tr + std::sqrt(std::max(0.0, beta * beta * (tr * tr - 4)) + 4)) / 2;
    return Matrix2{alpha + beta * t.a11, beta * t.a12, beta * t.a21, alpha + beta * t.a22};
  };
  auto size = [&](double u) {
    Matrix2 c = element(u), ci = c.inverse_unimodular();
    double total = 0;
    for (const Matrix2& m : {c * a.rep() * ci, c * b.rep() * ci}) {
      total += m.a11 * m.a11 + m.a12 * m.a12 + m.a21 * m.a21 + m.a22 * m.a22;
    }
    return total;
  };
  double best_u = 0, best = size(0);
  for (double u = -10; u <= 10; u += 0.05) {
    double v = size(u);
    if (v < best) {
      best = v;
      best_u = u;
    }
  }
  double lo = best_u - 0.05, hi = best_u + 0.05;
  for (int it = 0; it < 60; ++it) {
    double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    (size(m1) < size(m2) ? hi : lo) = (size(m1) < size(m2) ? m2 : m1);
  }
  return pm(element((lo + hi) / 2 + jitter));
}

// Nearest exact parabolic to a near-parabolic x: s I + tau k (Jk)^T with k spanning the
// kernel of x - sI.
ProjectiveMatrix snap_parabolic(const ProjectiveMatrix& x) {
  Matrix2 m = x.rep();
  double sgn = m.trace() >= 0 ? 1.0 : -1.0;
  Matrix2 n{m.a11 - sgn, m.a12, m.a21, m.a22 - sgn};
  double kx, ky;
  if (std::hypot(n.a11, n.a12) >= std::hypot(n.a21, n.a22)) {
    kx = n.a12;
    ky = -n.a11;
  } else {
    kx = n.a22;
    ky = -n.a21;
  }
  double norm2 = kx * kx + ky * ky;
  if (norm2 == 0) return x;
  // k (Jk)^T with Jk = (-ky, kx).
  Matrix2 e{-kx * ky, kx * kx, -ky * ky, kx * ky};
  double tau = (n.a11 * e.a11 + n.a12 * e.a12 + n.a21 * e.a21 + n.a22 * e.a22) / (norm2 * norm2);
  return pm(Matrix2{sgn + tau * e.a11, tau * e.a12, tau * e.a21, sgn + tau * e.a22});
}

struct Candidate {
  ProjectiveMatrix a, b;
};

// Checks the class of the lifted product, applying the diag(1,-1) mirror when that is legitimate.
std::optional<Candidate> accept(FactorKind k1, FactorKind k2, const Candidate& c, const CoverClass& target,
                                std::set<std::string>& seen) {
  // Ill-conditioned pairs lose the target's conjugacy class to rounding once transported.
  if (std::max(c.a.rep().max_abs(), c.b.rep().max_abs()) > kMaxFactorEntry) return std::nullopt;
  CoverClass got;
  try {
    got = cover_classify(cover_mul(lift_factor(c.a, k1), lift_factor(c.b, k2)));
  } catch (const Error&) {
    return std::nullopt;
  }
  seen.insert(got.to_string());
  if (got == target) return c;
  if (mirror(k1) == k1 && mirror(k2) == k2 && mirror(got) == target) {
    return Candidate{c.a.flipped(), c.b.flipped()};
  }
  return std::nullopt;
}

// One factor parabolic, the other Hyp0 or parabolic: the trace of the product is affine in
// the parabolic's translation parameter.
std::optional<Candidate> solve_affine(FactorKind k1, FactorKind k2, const CoverClass& target, double tstar, Rng& rng,
                                      std::set<std::string>& seen) {
  for (int attempt = 0; attempt < kSolveAttempts; ++attempt) {
    Matrix2 a0 = k1 == FactorKind::Hyp0 ? diagonal(uniform(rng, 0.2, 2.0)) : upper_unipotent(par_sign(k1));
    Matrix2 sa = sl_projection(lift_factor(pm(a0), k1));
    Matrix2 r = rotation(uniform(rng, 0, kPi));
    auto b_of = [&](double w) { return r * upper_unipotent(par_sign(k2) * w) * r.inverse_unimodular(); };
    Matrix2 sb1 = sl_projection(lift_factor(pm(b_of(1)), k2));
    double sign = sb1.trace() > 0 ? 1 : -1;
    double t0 = sign * sa.trace();
    double t1 = sign * (sa * b_of(1)).trace() - t0;
    if (std::abs(t1) < 1e-9) continue;
    double w = (tstar - t0) / t1;
    if (!(w > 0)) continue;
    if (auto c = accept(k1, k2, {pm(a0), pm(b_of(w))}, target, seen)) return c;
  }
  return std::nullopt;
}

Matrix2 normal_form(FactorKind k, double tstar, Rng& rng) {
  switch (k) {
    case FactorKind::Hyp0: {
      double need = std::acosh(std::max(std::abs(tstar), 2.0) / 2);
      return diagonal(uniform(rng, 0.05, need + 1.5));
    }
    case FactorKind::ParPlus0: return upper_unipotent(1);
    case FactorKind::ParMinus0: return upper_unipotent(-1);
    default: return rotation(uniform(rng, 0.05, kPi - 0.05));
  }
}

// Bracketed bisection on the trace of A * (S(q) B S(q)^-1) over a one-parameter family S
// that does not commute with A.
std::optional<Candidate> solve_scan(FactorKind k1, FactorKind k2, const CoverClass& target, double tstar, Rng& rng,
                                    std::set<std::string>& seen, int& brackets) {
  for (int attempt = 0; attempt < kSolveAttempts; ++attempt) {
    Matrix2 a0 = normal_form(k1, tstar, rng);
    Matrix2 b0 = normal_form(k2, tstar, rng);
    Matrix2 h0 = diagonal(uniform(rng, -1.0, 1.0)) * rotation(uniform(rng, 0, kPi));
    Matrix2 sa = sl_projection(lift_factor(pm(a0), k1));
    Matrix2 sb = sl_projection(lift_factor(pm(b0), k2));
    bool elliptic_a = is_ell_kind(k1);
    double qlo = elliptic_a ? -3.0 : 0.0, qhi = elliptic_a ? 3.0 : kPi;
    auto conj = [&](double q) {
      Matrix2 s = (elliptic_a ? diagonal(q) : rotation(q)) * h0;
      return s * sb * s.inverse_unimodular();
    };
    auto f = [&](double q) { return (sa * conj(q)).trace() - tstar; };
    double prev_q = qlo, prev_f = f(qlo);
    for (int i = 1; i <= kScanPoints; ++i) {
      double q = qlo + (qhi - qlo) * i / kScanPoints;
      double fq = f(q);
      if ((prev_f <= 0) != (fq <= 0)) {
        ++brackets;
        double lo = prev_q, hi = q, flo = prev_f;
        for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
          double mid = (lo + hi) / 2;
          double fm = f(mid);
          if (std::abs(fm) < kTraceTol) {
            lo = hi = mid;
            break;
          }
          if ((fm <= 0) == (flo <= 0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        double root = (lo + hi) / 2;
        if (auto c = accept(k1, k2, {pm(sa), pm(conj(root))}, target, seen)) return c;
      }
      prev_q = q;
      prev_f = fq;
    }
  }
  return std::nullopt;
}

// Magnitude of the rounding error in a product of these factors, relative to unit entries.
double rounding_scale(std::initializer_list<ProjectiveMatrix> factors) {
  double s = 1;
  for (const auto& f : factors) s *= std::max(1.0, f.rep().max_abs());
  return s;
}

void verify_product(const CoverElement& x, const CoverElement& y, const CoverElement& target, const CoverClass& tc,
                    const std::string& what) {
  CoverElement prod = cover_mul(x, y);
  double tol = (parabolic_class(tc) ? 1e-6 : 1e-8) * rounding_scale({x.base, y.base});
  double dist = projective_distance(prod.base, target.base);
  if (cover_classify(prod) != tc || dist > tol) {
    throw Error(ErrorCode::SelfVerificationFailed, what + ": product " + cover_classify(prod).to_string() +
                                                       " at distance " + std::to_string(dist) + " from target " +
                                                       tc.to_string());
  }
}

}  // namespace

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::Hyp0: return "Hyp0";
    case FactorKind::ParPlus0: return "ParPlus0";
    case FactorKind::ParMinus0: return "ParMinus0";
    case FactorKind::Ell1: return "Ell1";
    case FactorKind::EllMinus1: return "EllMinus1";
  }
  return "?";
}

FactorKind parse_factor_kind(const std::string& s) {
  for (FactorKind k : {FactorKind::Hyp0, FactorKind::ParPlus0, FactorKind::ParMinus0, FactorKind::Ell1,
                       FactorKind::EllMinus1}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown factor kind '" + s + "'");
}

CoverClass factor_class(FactorKind k) {
  switch (k) {
    case FactorKind::Hyp0: return hyp(0);
    case FactorKind::ParPlus0: return par_plus(0);
    case FactorKind::ParMinus0: return par_minus(0);
    case FactorKind::Ell1: return ell(1);
    case FactorKind::EllMinus1: return ell(-1);
  }
  return hyp(0);
}

FactorKind mirror(FactorKind k) {
  switch (k) {
    case FactorKind::ParPlus0: return FactorKind::ParMinus0;
    case FactorKind::ParMinus0: return FactorKind::ParPlus0;
    case FactorKind::Ell1: return FactorKind::EllMinus1;
    case FactorKind::EllMinus1: return FactorKind::Ell1;
    default: return k;
  }
}

CoverElement lift_factor(const ProjectiveMatrix& p, FactorKind k) {
  switch (k) {
    case FactorKind::Hyp0:
    case FactorKind::ParPlus0:
    case FactorKind::ParMinus0:
      return special_lift(p, LiftMode::ClosureHyp0);
    case FactorKind::Ell1:
      return special_lift(p, LiftMode::Eval);
    case FactorKind::EllMinus1: {
      CoverElement e = special_lift(p, LiftMode::Eval);
      e.lift_index -= 1;
      return e;
    }
  }
  return special_lift(p, LiftMode::ClosureHyp0);
}

bool product_reachable(FactorKind k1, FactorKind k2, const CoverClass& t) {
  if (k2 == FactorKind::Hyp0 || (is_ell_kind(k1) && !is_ell_kind(k2)) ||
      (k1 == FactorKind::EllMinus1 && k2 == FactorKind::Ell1)) {
    std::swap(k1, k2);
  }
  // Now k1 <= k2 in the order Hyp0, Par, Ell1/EllMinus1 (with Ell1 before EllMinus1).
  auto is = [&](const CoverClass& c) { return t == c; };
  if (k1 == FactorKind::Hyp0 && k2 == FactorKind::Hyp0) {
    return is(hyp(-1)) || is(hyp(0)) || is(hyp(1)) || is(ell(-1)) || is(ell(1)) || is(par_plus(0)) ||
           is(par_minus(0)) || is(par_minus(1)) || is(par_plus(-1));
  }
  if (k1 == FactorKind::Hyp0 && is_par_kind(k2)) {
    int s = par_sign(k2);
    return is(hyp(0)) || is(hyp(s)) || is(ell(s));
  }
  if (k1 == FactorKind::Hyp0 && is_ell_kind(k2)) return is(factor_class(k2));
  if (is_par_kind(k1) && is_par_kind(k2)) {
    int s1 = par_sign(k1), s2 = par_sign(k2);
    if (s1 != s2) return is(hyp(0));
    return is(hyp(s1)) || is(ell(s1)) || (s1 > 0 ? is(par_minus(1)) : is(par_plus(-1)));
  }
  if (is_par_kind(k1) && is_ell_kind(k2)) return is(factor_class(k2));
  if (k1 == FactorKind::Ell1 && k2 == FactorKind::EllMinus1) return is(ell(1)) || is(ell(-1));
  return false;
}

bool in_commutator_image(const CoverClass& c) {
  static const std::vector<CoverClass> image = {hyp(-1),   par_plus(-1), ell(-1),   par_plus(0), par_minus(0),
                                                center(0), hyp(0),       ell(1),    par_minus(1), hyp(1)};
  return std::find(image.begin(), image.end(), c) != image.end();
}

std::pair<CoverElement, CoverElement> solve_product(FactorKind k1, FactorKind k2, const CoverElement& target,
                                                    Rng& rng) {
  CoverClass tc = cover_classify(target);
  if (!product_reachable(k1, k2, tc)) {
    throw Error(ErrorCode::UnreachableTarget,
                to_string(k1) + " x " + to_string(k2) + " cannot reach " + tc.to_string());
  }
  double tstar = sl_projection(target).trace();
  // AB is conjugate to BA, so solve with a parabolic or elliptic factor second when convenient.
  bool swapped = (is_par_kind(k1) && k2 == FactorKind::Hyp0) || (is_ell_kind(k1) && !is_ell_kind(k2));
  FactorKind f1 = swapped ? k2 : k1, f2 = swapped ? k1 : k2;

  std::set<std::string> seen;
  int brackets = 0;
  std::optional<Candidate> found;
  if (is_par_kind(f2) && !is_ell_kind(f1)) {
    found = solve_affine(f1, f2, tc, tstar, rng, seen);
  } else {
    found = solve_scan(f1, f2, tc, tstar, rng, seen, brackets);
  }
  if (!found) {
    std::ostringstream msg;
    msg << to_string(k1) << " x " << to_string(k2) << " -> " << tc.to_string() << " (trace " << tstar
        << "): " << brackets << " brackets, classes seen:";
    for (const auto& s : seen) msg << ' ' << s;
    throw Error(ErrorCode::SolveFailed, msg.str());
  }
  ProjectiveMatrix a = swapped ? found->b : found->a;
  ProjectiveMatrix b = swapped ? found->a : found->b;
  ProjectiveMatrix g0 = conjugator(a * b, target.base), g0i = g0.inverse();
  ProjectiveMatrix g = settling_centralizer(target.base, g0 * a * g0i, g0 * b * g0i, rng) * g0;
  ProjectiveMatrix gi = g.inverse();
  auto place = [&](const ProjectiveMatrix& m, FactorKind k) {
    ProjectiveMatrix c = g * m * gi;
    return lift_factor(is_par_kind(k) ? snap_parabolic(c) : c, k);
  };
  CoverElement x = place(a, k1), y = place(b, k2);
  verify_product(x, y, target, tc, "solve_product");
  return {x, y};
}

std::pair<CoverElement, CoverElement> solve_commutator(const CoverElement& target, Rng& rng, bool randomize) {
  CoverClass tc = cover_classify(target);
  if (tc == center(0)) return {cover_identity(), cover_identity()};
  if (!in_commutator_image(tc)) {
    throw Error(ErrorCode::TargetOutsideImage, tc.to_string() + " is not a commutator class");
  }
  double kappa = sl_projection(target).trace();
  double x = 3, y = 3, z = 3;
  if (randomize) {
    for (int i = 0;; ++i) {
      if (i > 10000) throw Error(ErrorCode::SolveFailed, "no random trace triple found");
      double top = std::max(6.0, 2 * std::sqrt(std::sqrt(std::max(0.0, 8 - 4 * kappa)) + 4));
      x = uniform(rng, 2.2, top);
      y = uniform(rng, 2.2, top);
      double disc = x * x * y * y - 4 * (x * x + y * y - 2 - kappa);
      if (disc < 0) continue;
      z = (x * y + std::sqrt(disc)) / 2;
      if (z > 2) break;
    }
  } else if (kappa < 2) {
    // Root above 2 of t^3 - 3t^2 + 2 + kappa, which is negative at t = 2.
    auto cubic = [&](double t) { return t * t * t - 3 * t * t + 2 + kappa; };
    double lo = 2, hi = 4;
    while (cubic(hi) < 0) hi *= 2;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      double mid = (lo + hi) / 2;
      (cubic(mid) < 0 ? lo : hi) = mid;
    }
    x = y = z = (lo + hi) / 2;
  } else {
    z = (9 + std::sqrt(17 + 4 * kappa)) / 2;
  }
  double lambda = std::acosh(x / 2);
  double el = std::exp(lambda), eli = std::exp(-lambda);
  double p = (z - eli * y) / (el - eli);
  double s = y - p;
  Matrix2 a = diagonal(lambda);
  Matrix2 b{p, 1, p * s - 1, s};
  ProjectiveMatrix pa = pm(a), pb = pm(b);
  CoverClass got = cover_classify(cover_commutator({pa, 0}, {pb, 0}));
  if (got != tc) {
    if (mirror(got) != tc) {
      throw Error(ErrorCode::SolveFailed, "commutator landed in " + got.to_string() + ", wanted " + tc.to_string());
    }
    pa = pa.flipped();
    pb = pb.flipped();
  }
  ProjectiveMatrix comm = pa * pb * pa.inverse() * pb.inverse();
  ProjectiveMatrix g0 = conjugator(comm, target.base), g0i = g0.inverse();
  ProjectiveMatrix g = settling_centralizer(target.base, g0 * pa * g0i, g0 * pb * g0i, rng) * g0;
  ProjectiveMatrix gi = g.inverse();
  CoverElement xa{g * pa * gi, 0}, xb{g * pb * gi, 0};
  CoverElement c = cover_commutator(xa, xb);
  double tol = (parabolic_class(tc) ? 1e-6 : 1e-8) * rounding_scale({xa.base, xb.base, xa.base, xb.base});
  double dist = projective_distance(c.base, target.base);
  if (cover_classify(c) != tc || dist > tol) {
    throw Error(ErrorCode::SelfVerificationFailed, "solve_commutator missed " + tc.to_string() + " (got " +
                                                       cover_classify(c).to_string() + " at distance " +
                                                       std::to_string(dist * 1e9) + "e-9, |target| " +
                                                       std::to_string(target.base.rep().max_abs()) + ", trace gap " +
                                                       std::to_string((comm.abs_trace() - target.base.abs_trace()) * 1e12) + "e-12)");
  }
  return {xa, xb};
}

Representation build_boundary_extremal(int genus, int punctures, const ProjectiveMatrix& boundary, Rng& rng) {
  SurfacePresentation s(genus, punctures);
  if (classify_psl(boundary) != PslType::Hyperbolic) {
    throw Error(ErrorCode::NotHyperbolic, "boundary of an extremal piece must be hyperbolic");
  }
  CoverElement target = lift_to_class(boundary.inverse(), hyp(1));
  if (genus == 0 && punctures == 3) {
    auto [x, y] = solve_product(FactorKind::ParPlus0, FactorKind::ParPlus0, target, rng);
    return Representation(s, {x.base, y.base});
  }
  if (genus == 1 && punctures == 1) {
    auto [x, y] = solve_commutator(target, rng, true);
    return Representation(s, {x.base, y.base});
  }
  if (punctures >= 2) {
    // Pants (gamma, c_{p-1}, c_p) with gamma c_{p-1} c_p = 1 and euler class 1.
    auto [x, y] = solve_product(FactorKind::Hyp0, FactorKind::ParPlus0, target, rng);
    Representation inner = build_boundary_extremal(genus, punctures - 1, x.base.inverse(), rng);
    auto imgs = inner.free_images();
    imgs.push_back(y.base);
    return Representation(s, imgs);
  }
  // One puncture, genus >= 2: pants bounded by the first g-1 handles, the last handle and c_1.
  auto [x1, x2] = solve_product(FactorKind::Hyp0, FactorKind::Hyp0, target, rng);
  Representation left = build_boundary_extremal(genus - 1, 1, x1.base.inverse(), rng);
  Representation handle = build_boundary_extremal(1, 1, x2.base.inverse(), rng);
  auto imgs = left.free_images();
  for (const auto& m : handle.free_images()) imgs.push_back(m);
  return Representation(s, imgs);
}

namespace {

// Extremal representation with every puncture positive parabolic.
Representation build_all_plus(int genus, int punctures, Rng& rng) {
  SurfacePresentation s(genus, punctures);
  if (punctures == 1 && genus == 1) {
    CoverElement t = lift_to_class(random_parabolic(rng, 1).inverse(), par_minus(1));
    auto [x, y] = solve_commutator(t, rng, true);
    return Representation(s, {x.base, y.base});
  }
  if (punctures == 1) {
    CoverElement t = lift_to_class(random_parabolic(rng, 1).inverse(), par_minus(1));
    auto [x1, x2] = solve_product(FactorKind::Hyp0, FactorKind::Hyp0, t, rng);
    Representation left = build_boundary_extremal(genus - 1, 1, x1.base.inverse(), rng);
    Representation handle = build_boundary_extremal(1, 1, x2.base.inverse(), rng);
    auto imgs = left.free_images();
    for (const auto& m : handle.free_images()) imgs.push_back(m);
    return Representation(s, imgs);
  }
  if (genus == 0 && punctures == 3) {
    CoverElement t = lift_to_class(random_parabolic(rng, 1).inverse(), par_minus(1));
    auto [x, y] = solve_product(FactorKind::ParPlus0, FactorKind::ParPlus0, t, rng);
    return Representation(s, {x.base, y.base});
  }
  ProjectiveMatrix y = random_hyperbolic(rng);
  auto [u, v] = solve_product(FactorKind::ParPlus0, FactorKind::ParPlus0, lift_to_class(y, hyp(1)), rng);
  Representation inner = build_boundary_extremal(genus, punctures - 1, y, rng);
  auto imgs = inner.free_images();
  imgs.push_back(u.base);
  return Representation(s, imgs);
}

// Euler class -chi - 1 with the single negative puncture at position p.
Representation build_one_negative_last(int genus, int punctures, Rng& rng) {
  SurfacePresentation s(genus, punctures);
  if (punctures == 1 && genus == 1) {
    CoverElement t = lift_to_class(random_parabolic(rng, -1).inverse(), par_plus(0));
    auto [x, y] = solve_commutator(t, rng, true);
    return Representation(s, {x.base, y.base});
  }
  if (punctures == 1) {
    CoverElement t = lift_to_class(random_parabolic(rng, -1).inverse(), par_plus(0));
    auto [x1, x2] = solve_product(FactorKind::Hyp0, FactorKind::Hyp0, t, rng);
    Representation left = build_boundary_extremal(genus - 1, 1, x1.base.inverse(), rng);
    Representation handle = build_boundary_extremal(1, 1, x2.base.inverse(), rng);
    auto imgs = left.free_images();
    for (const auto& m : handle.free_images()) imgs.push_back(m);
    return Representation(s, imgs);
  }
  ProjectiveMatrix y = random_hyperbolic(rng);
  auto [u, v] = solve_product(FactorKind::ParPlus0, FactorKind::ParMinus0, lift_to_class(y, hyp(0)), rng);
  Representation inner = build_boundary_extremal(genus, punctures - 1, y, rng);
  auto imgs = inner.free_images();
  imgs.push_back(u.base);
  return Representation(s, imgs);
}

Representation snap_peripherals(const Representation& rep) {
  std::vector<std::pair<Generator, ProjectiveMatrix>> changes;
  for (int i = 1; i < rep.surface().punctures; ++i) changes.push_back({{'c', i}, snap_parabolic(rep.peripheral(i))});
  return rep.with_images(changes);
}

// Conjugate of rep by exp([[u, v], [v, -u]]) minimising the total squared Frobenius norm of
// the free images; the objective is convex along geodesics, so compass search suffices.
Representation balanced(const Representation& rep) {
  auto conjugator = [](double u, double v) {
    double r = std::hypot(u, v);
    double c = std::cosh(r), sr = r > 0 ? std::sinh(r) / r : 1.0;
    return Matrix2{c + sr * u, sr * v, sr * v, c - sr * u};
  };
  auto cost = [&](double u, double v) {
    Matrix2 h = conjugator(u, v), hi = h.inverse_unimodular();
    double total = 0;
    for (const auto& x : rep.free_images()) {
      Matrix2 y = h * x.rep() * hi;
      total += y.a11 * y.a11 + y.a12 * y.a12 + y.a21 * y.a21 + y.a22 * y.a22;
    }
    return total;
  };
  double u = 0, v = 0, best = cost(0, 0);
  for (double step = 0.25; step > 1e-6;) {
    bool moved = false;
    for (auto [du, dv] : {std::pair{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}) {
      double c = cost(u + du, v + dv);
      if (c < best) {
        best = c;
        u += du;
        v += dv;
        moved = true;
        break;
      }
    }
    if (!moved) step /= 2;
  }
  return rep.conjugated(pm(conjugator(u, v)));
}

// Conjugates the last free generator by a small one-parameter family so that the implied c_p
// is parabolic to rounding accuracy; nested solves otherwise leave |tr| - 2 near 1e-9.
Representation polish_last_peripheral(const Representation& rep) {
  const auto& s = rep.surface();
  Generator g = s.punctures >= 2 ? Generator{'c', s.punctures - 1} : Generator{'b', s.genus};
  ProjectiveMatrix x = rep.image(g);
  auto moved = [&](const Matrix2& h) {
    ProjectiveMatrix hp = pm(h);
    return rep.with_images({{g, hp * x * hp.inverse()}});
  };
  std::vector<std::function<Matrix2(double)>> families = {[](double q) { return rotation(q); },
                                                          [](double q) { return diagonal(q); },
                                                          [](double q) { return lower_unipotent(q); }};
  auto gap = [&](const std::function<Matrix2(double)>& fam, double q) {
    return moved(fam(q)).peripheral(s.punctures).abs_trace() - 2;
  };
  double f0 = rep.peripheral(s.punctures).abs_trace() - 2;
  if (std::abs(f0) < 1e-14) return rep;
  std::size_t best = 0;
  double slope = 0;
  for (std::size_t i = 0; i < families.size(); ++i) {
    double d = std::abs(gap(families[i], 1e-6) - gap(families[i], -1e-6));
    if (d > slope) {
      slope = d;
      best = i;
    }
  }
  const auto& fam = families[best];
  for (double delta = 1e-12; delta < 1e-2; delta *= 2) {
    for (double end : {delta, -delta}) {
      double fe = gap(fam, end);
      if ((fe > 0) == (f0 > 0)) continue;
      double lo = 0, hi = end, flo = f0;
      for (int it = 0; it < 200; ++it) {
        double mid = (lo + hi) / 2;
        double fm = gap(fam, mid);
        if (std::abs(fm) < 1e-15 || mid == lo || mid == hi) {
          lo = hi = mid;
          break;
        }
        if ((fm > 0) == (flo > 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      return moved(fam((lo + hi) / 2));
    }
  }
  throw Error(ErrorCode::SelfVerificationFailed, "could not make the last peripheral image parabolic");
}

std::vector<SplittingSpec> standard_splits(const SurfacePresentation& s) {
  std::vector<SplittingSpec> out;
  for (int j = 0; j <= s.genus; ++j) {
    for (int k = 0; k <= s.punctures; ++k) {
      if (is_standard_split(s, {j, k})) out.push_back({j, k});
    }
  }
  return out;
}

}  // namespace

void check_feasible(const BuildRequest& req) {
  SurfacePresentation s(req.genus, req.punctures);
  if (static_cast<int>(req.signs.size()) != req.punctures) {
    throw Error(ErrorCode::InvalidArgument, "sign vector has " + std::to_string(req.signs.size()) +
                                                " entries for " + std::to_string(req.punctures) + " punctures");
  }
  MwVerdict v = mw_bounds(req.genus, req.punctures, req.euler, req.signs);
  if (v == MwVerdict::FeasibleIff || v == MwVerdict::FeasibleSufficient) return;
  int chi = s.euler_characteristic();
  int pp = static_cast<int>(std::count(req.signs.begin(), req.signs.end(), 1));
  int pm_ = static_cast<int>(std::count(req.signs.begin(), req.signs.end(), -1));
  std::ostringstream msg;
  msg << "n = " << req.euler << " violates the Milnor-Wood bound chi + p+ <= n <= -chi - p- on " << s.label()
      << ", i.e. " << chi + pp << " <= n <= " << -chi - pm_ << " (verdict " << to_string(v) << ")";
  throw Error(ErrorCode::InfeasibleRequest, msg.str());
}

Representation build_rep(const BuildRequest& req) {
  check_feasible(req);
  SurfacePresentation s(req.genus, req.punctures);
  for (int x : req.signs) {
    if (x == 0) throw Error(ErrorCode::NotSupported, "build_rep only builds type-preserving representations");
  }
  int chi = s.euler_characteristic();
  int pp = static_cast<int>(std::count(req.signs.begin(), req.signs.end(), 1));
  int pm_ = req.punctures - pp;
  Rng rng(splitmix64(req.seed));

  bool flip = false;
  int negative = 0;  // position of the lone puncture whose sign differs, 0 if none
  if (req.euler == -chi && pm_ == 0) {
  } else if (req.euler == chi && pp == 0) {
    flip = true;
  } else if (req.euler == -chi - 1 && pm_ == 1) {
    negative = static_cast<int>(std::find(req.signs.begin(), req.signs.end(), -1) - req.signs.begin()) + 1;
  } else if (req.euler == chi + 1 && pp == 1) {
    flip = true;
    negative = static_cast<int>(std::find(req.signs.begin(), req.signs.end(), 1) - req.signs.begin()) + 1;
  } else {
    throw Error(ErrorCode::NotSupported, "only |n| = -chi with uniform signs or |n| = -chi - 1 with one "
                                         "opposite sign are constructed");
  }

  Representation rep = balanced(negative == 0 ? build_all_plus(req.genus, req.punctures, rng)
                                              : build_one_negative_last(req.genus, req.punctures, rng));
  for (const SplittingSpec& sp : standard_splits(s)) {
    ProjectiveMatrix gamma = rep.eval(s.splitting_word(sp.j, sp.k));
    if (classify_psl(gamma) != PslType::Hyperbolic) continue;
    // Twisting by t conjugates half the surface by exp(t * lambda); keep entries moderate.
    double amplitude = std::min(1.0, 1.0 / hyperbolic_frame(gamma).lambda);
    rep = balanced(twist_deform(rep, s.splitting_word(sp.j, sp.k), amplitude * uniform(rng, -1, 1)));
  }
  rep = polish_last_peripheral(balanced(snap_peripherals(rep)));
  if (negative != 0 && negative != req.punctures) {
    for (int i = 0; i < negative; ++i) rep = rotate_punctures(rep);
    rep = polish_last_peripheral(balanced(snap_peripherals(rep)));
  }
  if (flip) rep = rep.flipped();
  rep.seed = req.seed;
  rep.origin = "build_rep";

  if (!is_type_preserving(rep)) {
    std::ostringstream msg;
    msg << "build_rep output is not type-preserving; peripheral traces";
    for (int i = 1; i <= req.punctures; ++i) msg << ' ' << std::setprecision(17) << rep.peripheral(i).trace();
    throw Error(ErrorCode::SelfVerificationFailed, msg.str());
  }
  int e = euler_class(rep);
  SignVector got = sign_vector(rep);
  if (e != req.euler || got != req.signs) {
    throw Error(ErrorCode::SelfVerificationFailed, "build_rep produced e = " + std::to_string(e) + ", signs " +
                                                       format_signs(got) + " for request n = " +
                                                       std::to_string(req.euler) + ", signs " + format_signs(req.signs));
  }
  if (std::abs(euler_class(rep)) > -chi) {
    throw Error(ErrorCode::SelfVerificationFailed, "Milnor-Wood inequality violated");
  }
  return rep;
}

Representation twist_deform(const Representation& rep, const Word& curve, double t) {
  const auto& s = rep.surface();
  Word target = canonical_form(s.expand(curve));
  for (const SplittingSpec& sp : standard_splits(s)) {
    Word gamma = s.splitting_word(sp.j, sp.k);
    if (canonical_form(s.expand(gamma)) != target) continue;
    ProjectiveMatrix x = rep.eval(gamma);
    PslType type = classify_psl(x);
    if (type == PslType::Elliptic) throw Error(ErrorCode::BoundaryElliptic, "twist curve has elliptic image");
    if (type != PslType::Hyperbolic) {
      throw Error(ErrorCode::NotHyperbolic, "twist curve image is " + to_string(type));
    }
    if (t == 0) return rep;
    HyperbolicFrame f = hyperbolic_frame(x);
    ProjectiveMatrix xt = pm(f.frame * diagonal(t * f.lambda) * f.frame.inverse_unimodular());
    ProjectiveMatrix xti = xt.inverse();
    std::vector<std::pair<Generator, ProjectiveMatrix>> changes;
    for (int h = sp.j + 1; h <= s.genus; ++h) {
      for (char kind : {'a', 'b'}) changes.push_back({{kind, h}, xt * rep.image({kind, h}) * xti});
    }
    for (int i = sp.k + 1; i < s.punctures; ++i) changes.push_back({{'c', i}, xt * rep.peripheral(i) * xti});
    return rep.with_images(changes);
  }
  throw Error(ErrorCode::UnsupportedCurve, "'" + to_string(curve) + "' is not a standard splitting curve");
}

std::vector<Representation> sample(const BuildRequest& req, int count) {
  check_feasible(req);
  if (count < 0) throw Error(ErrorCode::InvalidArgument, "count must be non-negative");
  std::vector<Representation> out;
  for (int i = 0; i < count; ++i) {
    BuildRequest r = req;
    r.seed = derive_seed(req.seed, static_cast<std::uint64_t>(i));
    out.push_back(build_rep(r));
  }
  return out;
}

}  // namespace thyp
