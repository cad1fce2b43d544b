#include "thyp/mobius.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "thyp/errors.hpp"

namespace thyp {

double Matrix2::max_abs() const {
  return std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22)});
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

double max_abs_diff(const Matrix2& x, const Matrix2& y) {
  return std::max({std::abs(x.a11 - y.a11), std::abs(x.a12 - y.a12),
                   std::abs(x.a21 - y.a21), std::abs(x.a22 - y.a22)});
}

Matrix2 identity_matrix() { return {1, 0, 0, 1}; }
Matrix2 rotation(double t) { return {std::cos(t), std::sin(t), -std::sin(t), std::cos(t)}; }
Matrix2 diagonal(double lambda) { return {std::exp(lambda), 0, 0, std::exp(-lambda)}; }
Matrix2 upper_unipotent(double s) { return {1, s, 0, 1}; }
Matrix2 lower_unipotent(double s) { return {1, 0, s, 1}; }
Matrix2 flip_matrix() { return {1, 0, 0, -1}; }

namespace {

Matrix2 sign_canonical(const Matrix2& m) {
  double lead = m.a11 != 0 ? m.a11 : (m.a12 != 0 ? m.a12 : m.a21);
  return lead < 0 ? -m : m;
}

// Representative with non-negative trace.
Matrix2 positive_trace(const Matrix2& m) { return m.trace() < 0 ? -m : m; }

// Eigenvector of m for eigenvalue lambda, picking the better conditioned formula.
std::array<double, 2> eigenvector(const Matrix2& m, double lambda) {
  double x1 = m.a12, y1 = lambda - m.a11;
  double x2 = lambda - m.a22, y2 = m.a21;
  double n1 = std::hypot(x1, y1), n2 = std::hypot(x2, y2);
  if (n1 >= n2) return {x1 / n1, y1 / n1};
  return {x2 / n2, y2 / n2};
}

Matrix2 frame_from(std::array<double, 2> u, std::array<double, 2> w) {
  double d = u[0] * w[1] - u[1] * w[0];
  if (d < 0) {
    w = {-w[0], -w[1]};
    d = -d;
  }
  double s = 1.0 / std::sqrt(d);
  return {u[0] * s, w[0] * s, u[1] * s, w[1] * s};
}



}  // namespace

ProjectiveMatrix ProjectiveMatrix::from_matrix(const Matrix2& m) {
  double d = m.det();
  if (!(d > 0) || std::abs(d - 1) >= 1e-6) {
    throw Error(ErrorCode::NonUnitDeterminant, "determinant " + std::to_string(d));
  }
  return renormalize(m);
}

ProjectiveMatrix ProjectiveMatrix::renormalize(const Matrix2& m) {
  double d = m.det();
  if (!(d > 0)) throw Error(ErrorCode::NonUnitDeterminant, "determinant " + std::to_string(d));
  return ProjectiveMatrix(sign_canonical(m.scaled(1.0 / std::sqrt(d))));
}

ProjectiveMatrix ProjectiveMatrix::from_product(const Matrix2& m) {
  double scale = std::abs(m.a11 * m.a22) + std::abs(m.a12 * m.a21);
  if (!std::isfinite(scale)) throw Error(ErrorCode::NonUnitDeterminant, "product overflowed");
  if (scale < 1e6) return renormalize(m);
  return ProjectiveMatrix(sign_canonical(m));
}

double ProjectiveMatrix::abs_trace() const { return std::abs(m_.trace()); }

ProjectiveMatrix ProjectiveMatrix::operator*(const ProjectiveMatrix& o) const {
  return from_product(m_ * o.m_);
}

ProjectiveMatrix ProjectiveMatrix::inverse() const {
  return ProjectiveMatrix(sign_canonical(m_.inverse_unimodular()));
}

ProjectiveMatrix ProjectiveMatrix::flipped() const {
  return ProjectiveMatrix(sign_canonical({m_.a11, -m_.a12, -m_.a21, m_.a22}));
}

double projective_distance(const ProjectiveMatrix& p, const Matrix2& q) {
  return std::min(max_abs_diff(p.rep(), q), max_abs_diff(p.rep(), -q));
}

double projective_distance(const ProjectiveMatrix& p, const ProjectiveMatrix& q) {
  return projective_distance(p, q.rep());
}

std::string to_string(PslType t) {
  switch (t) {
    case PslType::Hyperbolic: return "hyperbolic";
    case PslType::ParabolicPlus: return "parabolic+";
    case PslType::ParabolicMinus: return "parabolic-";
    case PslType::Elliptic: return "elliptic";
    case PslType::Identity: return "identity";
  }
  return "?";
}

PslType classify_psl(const ProjectiveMatrix& p, double par_band) {
  double t = p.abs_trace();
  if (t > 2 + par_band) return PslType::Hyperbolic;
  if (t < 2 - par_band) return PslType::Elliptic;
  if (projective_distance(p, identity_matrix()) < 1e-8) return PslType::Identity;
  Matrix2 m = positive_trace(p.rep());
  return m.a12 - m.a21 > 0 ? PslType::ParabolicPlus : PslType::ParabolicMinus;
}

double direction_angle(double x, double y) {
  double a = std::atan2(-y, x);
  a = std::fmod(a + 2 * kPi, kPi);
  return a >= kPi ? 0.0 : a;
}

FixedDirections fixed_directions(const ProjectiveMatrix& p) {
  FixedDirections out;
  PslType type = classify_psl(p);
  if (type == PslType::Identity) {
    out.all = true;
    return out;
  }
  if (type == PslType::Elliptic) return out;
  Matrix2 m = positive_trace(p.rep());
  if (type == PslType::Hyperbolic) {
    double t = m.trace();
    double disc = std::sqrt(t * t - 4);
    for (double lambda : {(t + disc) / 2, (t - disc) / 2}) {
      auto v = eigenvector(m, lambda);
      out.angles.push_back(direction_angle(v[0], v[1]));
    }
    std::sort(out.angles.begin(), out.angles.end());
  } else {
    auto v = eigenvector(m, 1.0);
    out.angles.push_back(direction_angle(v[0], v[1]));
  }
  return out;
}

bool axes_cross(const ProjectiveMatrix& p, const ProjectiveMatrix& q) {
  if (classify_psl(p) != PslType::Hyperbolic || classify_psl(q) != PslType::Hyperbolic) {
    throw Error(ErrorCode::NotHyperbolic, "axes_cross needs two hyperbolic elements");
  }
  auto fp = fixed_directions(p).angles;
  auto fq = fixed_directions(q).angles;
  auto inside = [&](double x) { return fp[0] < x && x < fp[1]; };
  for (double x : fq) {
    for (double y : fp) {
      if (x == y) return false;
    }
  }
  return inside(fq[0]) != inside(fq[1]);
}

HyperbolicFrame hyperbolic_frame(const ProjectiveMatrix& p) {
  if (classify_psl(p) != PslType::Hyperbolic) {
    throw Error(ErrorCode::NotHyperbolic, "hyperbolic_frame");
  }
  Matrix2 m = positive_trace(p.rep());
  double t = m.trace();
  double lambda = std::acosh(t / 2);
  auto u = eigenvector(m, std::exp(lambda));
  auto w = eigenvector(m, std::exp(-lambda));
  return {frame_from(u, w), lambda};
}

ProjectiveMatrix conjugator(const ProjectiveMatrix& p, const ProjectiveMatrix& q) {
  PslType tp = classify_psl(p), tq = classify_psl(q);
  if (tp != tq) {
    throw Error(ErrorCode::NotConjugate, to_string(tp) + " vs " + to_string(tq));
  }
  double scale = std::max({1.0, p.rep().max_abs(), q.rep().max_abs()});
  if ((tp == PslType::Hyperbolic || tp == PslType::Elliptic) &&
      std::abs(p.abs_trace() - q.abs_trace()) > 1e-8 * scale) {
    throw Error(ErrorCode::NotConjugate, "traces differ");
  }
  if (tp == PslType::Identity) return ProjectiveMatrix::renormalize(identity_matrix());
  Matrix2 pm = p.rep();
  Matrix2 qm = q.rep();
  if ((pm.trace() < 0) != (qm.trace() < 0)) qm = -qm;
  // An involution's two representatives have traces of either sign up to rounding.
  bool both_signs = tp == PslType::Elliptic && std::abs(pm.trace()) < 1e-8;
  for (int attempt = 0; attempt < (both_signs ? 2 : 1); ++attempt) {
    if (attempt == 1) qm = -qm;
    // Solutions of G P = Q G form a plane; take the element of largest determinant.
    Eigen::Matrix4d k;
    // Row (i,j) of qG - Gp, with vec(G) = (g11, g12, g21, g22).
    k << qm.a11 - pm.a11, -pm.a21, qm.a12, 0,
        -pm.a12, qm.a11 - pm.a22, 0, qm.a12,
        qm.a21, 0, qm.a22 - pm.a11, -pm.a21,
        0, qm.a21, -pm.a12, qm.a22 - pm.a22;
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(k, Eigen::ComputeFullV);
    Eigen::Vector4d v1 = svd.matrixV().col(2), v2 = svd.matrixV().col(3);
    auto as_matrix = [](const Eigen::Vector4d& v) { return Matrix2{v(0), v(1), v(2), v(3)}; };
    Matrix2 n1 = as_matrix(v1), n2 = as_matrix(v2);
    Matrix2 sum{n1.a11 + n2.a11, n1.a12 + n2.a12, n1.a21 + n2.a21, n1.a22 + n2.a22};
    double d1 = n1.det(), d2 = n2.det();
    double c = (sum.det() - d1 - d2) / 2;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> form(Eigen::Matrix2d{{d1, c}, {c, d2}});
    if (!(form.eigenvalues()(1) > 1e-9)) continue;
    Eigen::Vector2d w = form.eigenvectors().col(1);
    Matrix2 g{w(0) * n1.a11 + w(1) * n2.a11, w(0) * n1.a12 + w(1) * n2.a12, w(0) * n1.a21 + w(1) * n2.a21,
              w(0) * n1.a22 + w(1) * n2.a22};
    return ProjectiveMatrix::renormalize(g);
  }
  throw Error(ErrorCode::NotConjugate, "conjugate only by an orientation-reversing map");
}

}  // namespace thyp
