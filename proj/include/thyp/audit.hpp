#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thyp/mobius.hpp"
#include "thyp/surface.hpp"
#include "thyp/word.hpp"

namespace thyp {

enum class ViolationKind { Elliptic, Margin, Identity };
std::string to_string(ViolationKind k);

struct Violation {
  Word curve;
  ViolationKind kind;
  PslType type;
  double trace = 0;  // |trace|
};

struct AuditOptions {
  int depth = 4;
  double margin = 1e-6;
  /// Depth is raised (up to max_depth) until at least this many curves are enumerated.
  std::size_t min_curves = 0;
  int max_depth = 12;
  int jobs = 1;
};

struct AuditReport {
  int genus = 0;
  int punctures = 0;
  int euler = 0;
  SignVector signs;
  int requested_depth = 0;
  int depth = 0;
  double margin = 0;
  std::size_t curves_checked = 0;
  std::size_t dropped = 0;
  /// Curves whose trace could not be separated from 2 by the rounding bound; counted as
  /// margin violations.
  std::size_t unresolved = 0;
  /// min over curves of |trace| - 2; +infinity when no curve was checked.
  double min_trace_margin = 0;
  Word min_margin_curve;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

AuditReport audit_rep(const Representation& rep, const AuditOptions& opts = {});

struct RestrictionPiece {
  std::string role;  // "pants" or "complement"
  int genus = 0;
  int punctures = 0;
  int euler = 0;
  bool extremal() const { return euler == 2 * genus + punctures - 2 || euler == -(2 * genus + punctures - 2); }
};

struct RestrictionReport {
  int euler = 0;
  SignVector signs;
  int distinguished = 0;  // puncture inside the pants piece
  std::vector<RestrictionPiece> pieces;
  bool additive = false;           // piece classes sum to euler
  bool pants_zero = false;         // the pants piece has e = 0
  bool complement_extremal = false;
  bool all_extremal = false;
  bool counterexample_pattern() const { return additive && pants_zero && complement_extremal; }
};

/// Cuts off the pants containing the negative puncture (the positive one for the mirrored
/// family, puncture p otherwise) along standard splitting curves and reports each piece's class.
RestrictionReport check_restrictions(const Representation& rep);

/// Sigma_{0,4} with c1 = [[1,1],[0,1]], c2 = [[1,0],[-2,1]] (c1 c2 elliptic, trace 0) and c3 the
/// positive parabolic with translation length `translation` and axis angle chosen so that the
/// implied c4 is parabolic.
Representation negative_control(double translation = 1.0);

}  // namespace thyp
