#include <cmath>

#include "doctest.h"
#include "thyp/audit.hpp"
#include "thyp/constructors.hpp"
#include "thyp/curves.hpp"
#include "thyp/errors.hpp"

using namespace thyp;

TEST_CASE("negative control") {
  Representation nc = negative_control();
  CHECK(is_type_preserving(nc));
  CHECK(sign_vector(nc)[0] == 1);
  CHECK(sign_vector(nc)[2] == 1);
  CHECK((nc.peripheral(1) * nc.peripheral(2)).trace() == 0);
  AuditReport r = audit_rep(nc, {0, 1e-6});
  CHECK_FALSE(r.passed());
  bool found = false;
  Word c1c2 = canonical_form(parse_word("c1 c2"));
  for (const auto& v : r.violations) {
    if (v.curve == c1c2) {
      found = true;
      CHECK(v.kind == ViolationKind::Elliptic);
      CHECK(v.trace == 0);
    }
  }
  CHECK(found);
  CHECK(r.min_trace_margin < 0);
}

TEST_CASE("audit of builds") {
  Representation fuchsian = build_rep({1, 2, 2, {1, 1}, 3});
  AuditReport f = audit_rep(fuchsian, {4, 1e-6});
  CHECK(f.passed());
  CHECK(f.curves_checked == enumerate_scc({1, 2}, 4).curves.size());
  CHECK(f.min_trace_margin > 1e-6);

  Representation rep = build_rep({0, 4, 1, {1, 1, 1, -1}, 42});
  AuditReport a = audit_rep(rep, {4, 1e-6});
  CHECK(a.euler == 1);
  CHECK(a.passed() == (a.min_trace_margin > 1e-6));

  AuditOptions deep{4, 1e-6, 500, 12, 1};
  AuditReport d = audit_rep(rep, deep);
  CHECK(d.curves_checked >= 500);
  CHECK(d.depth >= 4);
}

TEST_CASE("audit is independent of the job count") {
  Representation rep = build_rep({1, 2, 1, {1, -1}, 8});
  AuditReport one = audit_rep(rep, {4, 1e-6, 0, 12, 1});
  AuditReport many = audit_rep(rep, {4, 1e-6, 0, 12, 4});
  CHECK(one.curves_checked == many.curves_checked);
  CHECK(one.min_trace_margin == many.min_trace_margin);
  CHECK(one.min_margin_curve == many.min_margin_curve);
  CHECK(one.violations.size() == many.violations.size());
}

TEST_CASE("audit preconditions") {
  Representation hyperbolic_boundary(SurfacePresentation(0, 3), {ProjectiveMatrix::from_matrix(upper_unipotent(1)),
                                                                  ProjectiveMatrix::from_matrix(lower_unipotent(-5))});
  CHECK_THROWS_AS(audit_rep(hyperbolic_boundary), Error);
  try {
    audit_rep(hyperbolic_boundary);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTypePreserving);
  }
}

TEST_CASE("check_restrictions") {
  RestrictionReport a = check_restrictions(build_rep({0, 4, 1, {1, 1, 1, -1}, 42}));
  REQUIRE(a.pieces.size() == 2);
  CHECK(a.pants_zero);
  CHECK(a.complement_extremal);
  CHECK(a.additive);
  CHECK(a.counterexample_pattern());
  CHECK(a.pieces[1].euler == 1);

  RestrictionReport b = check_restrictions(build_rep({1, 2, 1, {1, -1}, 7}));
  CHECK(b.counterexample_pattern());
  CHECK(b.distinguished == 2);

  RestrictionReport c = check_restrictions(build_rep({0, 5, 2, {1, -1, 1, 1, 1}, 4}));
  CHECK(c.distinguished == 2);
  CHECK(c.counterexample_pattern());

  RestrictionReport d = check_restrictions(build_rep({2, 1, 2, {-1}, 5}));
  CHECK(d.pieces.size() == 3);
  CHECK(d.counterexample_pattern());

  RestrictionReport f = check_restrictions(build_rep({1, 2, 2, {1, 1}, 5}));
  CHECK(f.all_extremal);
  CHECK(f.additive);
  CHECK_FALSE(f.pants_zero);

  CHECK_THROWS_AS(check_restrictions(build_rep({1, 1, 1, {1}, 5})), Error);
}
