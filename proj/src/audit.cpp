#include "thyp/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include "thyp/curves.hpp"
#include "thyp/errors.hpp"

namespace thyp {

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Elliptic: return "elliptic";
    case ViolationKind::Margin: return "margin";
    case ViolationKind::Identity: return "identity";
  }
  return "?";
}

namespace {

struct CurveResult {
  PslType type;
  double trace;  // |trace|
  bool resolved;
};

struct Mat {
  long double a, b, c, d;
};

Mat mul(const Mat& x, const Mat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

long double norm_inf(const Mat& m) {
  return std::max(std::abs(m.a) + std::abs(m.b), std::abs(m.c) + std::abs(m.d));
}

// Generator images and their inverses, c_p included.
struct Images {
  std::vector<Generator> gens;
  std::vector<Mat> fwd, inv;

  explicit Images(const Representation& rep) {
    gens = rep.surface().free_generators();
    gens.push_back({'c', rep.surface().punctures});
    for (const auto& g : gens) {
      Matrix2 m = rep.image(g).rep();
      fwd.push_back({m.a11, m.a12, m.a21, m.a22});
      inv.push_back({m.a22, -m.a12, -m.a21, m.a11});
    }
  }
  const Mat& get(const Letter& l) const {
    std::size_t i = static_cast<std::size_t>(std::find(gens.begin(), gens.end(), l.gen) - gens.begin());
    return l.exp > 0 ? fwd[i] : inv[i];
  }
};

// Product in extended precision with the first-order rounding bound
// eps * sum_k |L_{k-1}| |A_k| |R_{k+1}| (prefix and suffix products). Curves whose |trace|
// cannot be separated from 2 by that bound are reported as unresolved instead of being
// classified from noise.
CurveResult evaluate(const Images& images, const Word& w) {
  constexpr long double eps = std::numeric_limits<long double>::epsilon();
  const std::size_t n = w.size();
  std::vector<long double> suffix(n + 1, 1.0L);
  Mat r{1, 0, 0, 1};
  for (std::size_t k = n; k-- > 0;) {
    r = mul(images.get(w[k]), r);
    suffix[k] = norm_inf(r);
  }
  Mat acc{1, 0, 0, 1};
  long double err = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Mat& a = images.get(w[k]);
    err += 4 * eps * norm_inf(acc) * norm_inf(a) * (k + 1 < n ? suffix[k + 1] : 1.0L);
    acc = mul(acc, a);
  }
  if (!std::isfinite(static_cast<double>(acc.a + acc.d))) return {PslType::Hyperbolic, HUGE_VAL, false};
  long double det = acc.a * acc.d - acc.b * acc.c;
  long double t = std::abs(acc.a + acc.d);
  long double bound = 2 * err + 4 * eps * norm_inf(acc);
  if (det > 0 && bound < 1e-11L) {
    long double s = 1 / std::sqrt(det);
    Matrix2 m{static_cast<double>(acc.a * s), static_cast<double>(acc.b * s), static_cast<double>(acc.c * s),
              static_cast<double>(acc.d * s)};
    ProjectiveMatrix pmat = ProjectiveMatrix::renormalize(m);
    return {classify_psl(pmat), std::abs(pmat.trace()), true};
  }
  double td = static_cast<double>(t);
  if (t - 2 > bound) return {PslType::Hyperbolic, td, true};
  if (2 - t > bound) return {PslType::Elliptic, td, true};
  return {t >= 2 ? PslType::Hyperbolic : PslType::Elliptic, td, false};
}

}  // namespace

AuditReport audit_rep(const Representation& rep, const AuditOptions& opts) {
  if (opts.depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be non-negative");
  if (!(opts.margin >= 0)) throw Error(ErrorCode::InvalidArgument, "margin must be non-negative");
  if (!is_type_preserving(rep)) {
    std::string which;
    for (int i = 1; i <= rep.surface().punctures; ++i) {
      if (!is_parabolic(classify_psl(rep.peripheral(i)))) which += " c" + std::to_string(i);
    }
    throw Error(ErrorCode::NotTypePreserving, "non-parabolic peripheral images:" + which);
  }
  const auto& s = rep.surface();
  AuditReport report;
  report.genus = s.genus;
  report.punctures = s.punctures;
  report.euler = euler_class(rep);
  report.signs = sign_vector(rep);
  report.requested_depth = opts.depth;
  report.margin = opts.margin;

  CurveSet set = enumerate_scc_at_least(s, opts.depth, opts.min_curves, std::max(opts.depth, opts.max_depth));
  report.depth = set.depth;
  report.dropped = set.dropped;
  report.curves_checked = set.curves.size();

  // Each worker writes a disjoint stride of the result vector, so the reduction below sees the
  // same data for any job count.
  Images images(rep);
  std::vector<CurveResult> results(set.curves.size());
  int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(set.curves.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < set.curves.size(); ++i) results[i] = evaluate(images, set.curves[i]);
  } else {
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        for (std::size_t i = j; i < set.curves.size(); i += jobs) results[i] = evaluate(images, set.curves[i]);
      });
    }
    for (auto& w : workers) w.join();
  }

  report.min_trace_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CurveResult& r = results[i];
    double gap = r.trace - 2;
    if (!r.resolved) ++report.unresolved;
    if (gap < report.min_trace_margin) {
      report.min_trace_margin = gap;
      report.min_margin_curve = set.curves[i];
    }
    std::optional<ViolationKind> kind;
    if (r.type == PslType::Identity) {
      kind = ViolationKind::Identity;
    } else if (r.type == PslType::Elliptic) {
      kind = ViolationKind::Elliptic;
    } else if (!r.resolved || gap <= opts.margin) {
      kind = ViolationKind::Margin;
    }
    if (kind) report.violations.push_back({set.curves[i], *kind, r.type, r.trace});
  }
  return report;
}

namespace {

RestrictionPiece piece(const std::string& role, const Representation& r) {
  return {role, r.surface().genus, r.surface().punctures, euler_class(r)};
}

}  // namespace

RestrictionReport check_restrictions(const Representation& rep) {
  const auto& s = rep.surface();
  RestrictionReport report;
  report.euler = euler_class(rep);
  report.signs = sign_vector(rep);
  int chi = s.euler_characteristic();
  auto count = [&](int sign) { return static_cast<int>(std::count(report.signs.begin(), report.signs.end(), sign)); };

  int distinguished = s.punctures;
  int odd_sign = report.euler == -chi - 1 ? -1 : report.euler == chi + 1 ? 1 : 0;
  if (odd_sign != 0 && count(odd_sign) == 1) {
    distinguished = static_cast<int>(std::find(report.signs.begin(), report.signs.end(), odd_sign) -
                                     report.signs.begin()) + 1;
  }
  report.distinguished = distinguished;

  Representation r = rep;
  for (int i = distinguished; i < s.punctures; ++i) r = rotate_punctures(r);

  if (s.genus == 0 && s.punctures == 3) {
    report.pieces.push_back(piece("pants", r));
  } else if (s.punctures >= 2) {
    auto [left, right] = restrict_rep(r, {s.genus, s.punctures - 2});
    report.pieces.push_back(piece("pants", right));
    report.pieces.push_back(piece("complement", left));
  } else if (s.genus >= 2) {
    auto [left, rest] = restrict_rep(r, {s.genus - 1, 0});
    auto [handle, pants] = restrict_rep(rest, {1, 0});
    report.pieces.push_back(piece("pants", pants));
    report.pieces.push_back(piece("complement", left));
    report.pieces.push_back(piece("complement", handle));
  } else {
    throw Error(ErrorCode::NotSupported, "S(1,1) contains no pants bounded by standard splitting curves");
  }

  int total = 0;
  report.complement_extremal = true;
  report.all_extremal = true;
  for (const auto& p : report.pieces) {
    total += p.euler;
    if (!p.extremal()) {
      report.all_extremal = false;
      if (p.role == "complement") report.complement_extremal = false;
    }
    if (p.role == "pants") report.pants_zero = p.euler == 0;
  }
  report.additive = total == report.euler;
  return report;
}

Representation negative_control(double translation) {
  SurfacePresentation s(0, 4);
  ProjectiveMatrix c1 = ProjectiveMatrix::from_matrix(upper_unipotent(1));
  ProjectiveMatrix c2 = ProjectiveMatrix::from_matrix(lower_unipotent(-2));
  Matrix2 m = (c1 * c2).rep();
  auto c3_at = [&](double theta) {
    Matrix2 r = rotation(theta);
    return r * upper_unipotent(translation) * r.inverse_unimodular();
  };
  auto gap = [&](double theta) { return std::abs((m * c3_at(theta)).trace()) - 2; };
  const int n = 720;
  double prev = gap(0);
  for (int i = 1; i <= n; ++i) {
    double hi = kPi * i / n, lo = kPi * (i - 1) / n;
    double cur = gap(hi);
    if ((prev < 0) != (cur < 0)) {
      double flo = prev;
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        double mid = (lo + hi) / 2;
        double fm = gap(mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      return Representation(s, {c1, c2, ProjectiveMatrix::renormalize(c3_at((lo + hi) / 2))});
    }
    prev = cur;
  }
  throw Error(ErrorCode::SolveFailed, "no axis angle makes c4 parabolic for this translation length");
}

}  // namespace thyp
