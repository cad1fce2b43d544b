#pragma once

#include <array>
#include <string>
#include <vector>

namespace thyp {

inline constexpr double kPi = 3.14159265358979323846;
// Width of the trace band |tr| = 2 +- kParBand treated as parabolic.
inline constexpr double kParBand = 1e-8;

/// Plain 2x2 real matrix, row major.
struct Matrix2 {
  double a11 = 1, a12 = 0, a21 = 0, a22 = 1;

  double det() const { return a11 * a22 - a12 * a21; }
  double trace() const { return a11 + a22; }
  Matrix2 inverse_unimodular() const { return {a22, -a12, -a21, a11}; }
  Matrix2 operator-() const { return {-a11, -a12, -a21, -a22}; }
  Matrix2 scaled(double s) const { return {s * a11, s * a12, s * a21, s * a22}; }
  double max_abs() const;
};

Matrix2 operator*(const Matrix2& x, const Matrix2& y);
double max_abs_diff(const Matrix2& x, const Matrix2& y);

Matrix2 identity_matrix();
/// [[cos t, sin t], [-sin t, cos t]]; acts on the angle coordinate as x -> x + t.
Matrix2 rotation(double t);
Matrix2 diagonal(double lambda);  // diag(e^lambda, e^-lambda)
Matrix2 upper_unipotent(double s);
Matrix2 lower_unipotent(double s);
Matrix2 flip_matrix();  // diag(1, -1), determinant -1

/// Element of PSL(2,R) stored as its sign-canonical SL representative.
class ProjectiveMatrix {
 public:
  ProjectiveMatrix() = default;

  /// Checked constructor: det must be within 1e-6 of 1.
  static ProjectiveMatrix from_matrix(const Matrix2& m);
  /// Rescales any matrix of positive determinant; used after products.
  static ProjectiveMatrix renormalize(const Matrix2& m);
  /// For products of unimodular factors: rescales only while the determinant is still
  /// resolvable in double precision, otherwise keeps the entries as computed.
  static ProjectiveMatrix from_product(const Matrix2& m);

  const Matrix2& rep() const { return m_; }
  double trace() const { return m_.trace(); }
  double abs_trace() const;

  ProjectiveMatrix operator*(const ProjectiveMatrix& o) const;
  ProjectiveMatrix inverse() const;
  /// Conjugation by diag(1,-1).
  ProjectiveMatrix flipped() const;

 private:
  explicit ProjectiveMatrix(const Matrix2& m) : m_(m) {}
  Matrix2 m_{};
};

/// Distance modulo sign: min over +-1 of the entrywise max difference.
double projective_distance(const ProjectiveMatrix& p, const ProjectiveMatrix& q);
double projective_distance(const ProjectiveMatrix& p, const Matrix2& q);
inline bool is_identity(const ProjectiveMatrix& p, double tol = 1e-8) {
  return projective_distance(p, identity_matrix()) < tol;
}

enum class PslType { Hyperbolic, ParabolicPlus, ParabolicMinus, Elliptic, Identity };

std::string to_string(PslType t);
PslType classify_psl(const ProjectiveMatrix& p, double par_band = kParBand);
inline bool is_parabolic(PslType t) {
  return t == PslType::ParabolicPlus || t == PslType::ParabolicMinus;
}

/// Angle coordinate of the direction spanned by (x, y), in [0, pi).
double direction_angle(double x, double y);

struct FixedDirections {
  bool all = false;            // identity fixes every direction
  std::vector<double> angles;  // sorted, in [0, pi)
};
FixedDirections fixed_directions(const ProjectiveMatrix& p);

bool axes_cross(const ProjectiveMatrix& p, const ProjectiveMatrix& q);

/// Some G with G p G^-1 = q.
ProjectiveMatrix conjugator(const ProjectiveMatrix& p, const ProjectiveMatrix& q);

/// For hyperbolic p, an SL frame F and lambda > 0 with p = F diag(e^l, e^-l) F^-1.
struct HyperbolicFrame {
  Matrix2 frame;
  double lambda;
};
HyperbolicFrame hyperbolic_frame(const ProjectiveMatrix& p);

}  // namespace thyp
