#include "thyp/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "thyp/constructors.hpp"
#include "thyp/cover.hpp"
#include "thyp/errors.hpp"
#include "thyp/random.hpp"
#include "thyp/surface.hpp"

namespace thyp {

std::string to_string(Suite s) {
  switch (s) {
    case Suite::CoverLaws: return "cover-laws";
    case Suite::ImageTheorems: return "image-theorems";
    case Suite::SignRules: return "sign-rules";
    case Suite::Euler: return "euler";
  }
  return "?";
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ull;
  return h;
}

class Check {
 public:
  Check(Suite suite, std::string name, std::uint64_t seed)
      : rng(derive_seed(seed, fnv1a(name))), start_(std::chrono::steady_clock::now()) {
    result_.suite = to_string(suite);
    result_.name = std::move(name);
  }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++result_.trials;
    if (!ok) {
      ++result_.failures;
      if (result_.first_failure.empty()) result_.first_failure = what();
    }
  }
  void fail(const std::string& what) { expect(false, [&] { return what; }); }

  // Runs one trial body; library errors count as failures of that trial.
  void trial(const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  std::size_t trials() const { return result_.trials; }

  CheckResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

  Rng rng;

 private:
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::size_t scaled(std::size_t n, double scale) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * scale)));
}

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix2 random_frame(Rng& rng, double stretch = 1.5) {
  return rotation(uniform(rng, 0, kPi)) * diagonal(uniform(rng, -stretch, stretch)) * rotation(uniform(rng, 0, kPi));
}

ProjectiveMatrix conjugate(const Matrix2& f, const Matrix2& m) {
  return ProjectiveMatrix::renormalize(f * m * f.inverse_unimodular());
}

ProjectiveMatrix random_sl(Rng& rng, double stretch = 2.0) {
  return ProjectiveMatrix::renormalize(random_frame(rng, stretch));
}
ProjectiveMatrix random_hyperbolic(Rng& rng) { return conjugate(random_frame(rng), diagonal(uniform(rng, 0.05, 2.0))); }
ProjectiveMatrix random_parabolic(Rng& rng, int sign) {
  return conjugate(random_frame(rng), upper_unipotent(sign * uniform(rng, 0.2, 3.0)));
}
ProjectiveMatrix random_elliptic(Rng& rng) {
  return conjugate(random_frame(rng), rotation(uniform(rng, 0.05, kPi - 0.05)));
}

CoverClass par(int sign, int n) { return sign > 0 ? par_plus(n) : par_minus(n); }

// Mixture over the PSL types, each with a random deck index.
CoverElement random_element(Rng& rng, int max_index = 3) {
  ProjectiveMatrix base;
  switch (pick(rng, 0, 4)) {
    case 0: base = random_hyperbolic(rng); break;
    case 1: base = random_parabolic(rng, 1); break;
    case 2: base = random_parabolic(rng, -1); break;
    case 3: base = random_elliptic(rng); break;
    default: base = random_sl(rng); break;
  }
  return {base, pick(rng, -max_index, max_index)};
}

// Ell(1) and Ell(-1) are adjacent: shifting by z steps over the missing Ell(0).
CoverClass expected_shift(const CoverClass& c, int m) {
  if (c.tag != CoverTag::Ell) return {c.tag, c.n + m};
  int slot = c.n > 0 ? c.n - 1 : c.n;
  slot += m;
  return ell(slot >= 0 ? slot + 1 : slot);
}

bool decisively(const ProjectiveMatrix& p, PslType want) {
  double gap = std::abs(p.trace()) - 2;
  if (want == PslType::Hyperbolic) return gap > 1e-6;
  if (want == PslType::Elliptic) return gap < -1e-6;
  return false;
}

std::string describe(const std::vector<CoverClass>& cs) {
  std::string out;
  for (const auto& c : cs) out += (out.empty() ? "" : ", ") + c.to_string();
  return "{" + out + "}";
}

bool contains(const std::vector<CoverClass>& cs, const CoverClass& c) {
  return std::find(cs.begin(), cs.end(), c) != cs.end();
}

// ---------------------------------------------------------------- cover laws

std::vector<CheckResult> cover_laws(const SelftestOptions& o) {
  std::vector<CheckResult> out;
  const std::size_t n = scaled(10000, o.scale);

  {
    Check c(Suite::CoverLaws, "homomorphism", o.seed);
    for (std::size_t i = 0; i < n; ++i) {
      c.trial([&] {
        auto x = random_element(c.rng), y = random_element(c.rng);
        Matrix2 direct = x.base.rep() * y.base.rep();
        double d = projective_distance(cover_mul(x, y).base, ProjectiveMatrix::renormalize(direct));
        c.expect(d < 1e-9 * std::max(1.0, direct.max_abs()), [&] {
          return "base of the product differs by " + std::to_string(d);
        });
      });
    }
    out.push_back(c.finish());
  }
  {
    Check c(Suite::CoverLaws, "associativity", o.seed);
    for (std::size_t i = 0; i < n; ++i) {
      c.trial([&] {
        auto x = random_element(c.rng), y = random_element(c.rng), w = random_element(c.rng);
        auto l = cover_mul(cover_mul(x, y), w), r = cover_mul(x, cover_mul(y, w));
        c.expect(l.lift_index == r.lift_index && cover_equal(l, r, 1e-8 * std::max(1.0, l.base.rep().max_abs())), [&] {
          return "(xy)w has index " + std::to_string(l.lift_index) + ", x(yw) has " + std::to_string(r.lift_index);
        });
      });
    }
    out.push_back(c.finish());
  }
  {
    Check c(Suite::CoverLaws, "inverse", o.seed);
    for (std::size_t i = 0; i < n; ++i) {
      c.trial([&] {
        auto x = random_element(c.rng);
        auto l = cover_mul(x, cover_inv(x)), r = cover_mul(cover_inv(x), x);
        c.expect(l.lift_index == 0 && r.lift_index == 0 && is_identity(l.base) && is_identity(r.base),
                 [] { return std::string("x x^-1 is not the identity"); });
      });
    }
    out.push_back(c.finish());
  }
  {
    Check c(Suite::CoverLaws, "central shift", o.seed);
    for (std::size_t i = 0; i < n; ++i) {
      c.trial([&] {
        auto x = random_element(c.rng);
        int m = pick(c.rng, -3, 3);
        CoverClass before = cover_classify(x);
        CoverClass want = expected_shift(before, m);
        CoverClass left = cover_classify(cover_mul(central(m), x));
        CoverClass right = cover_classify(cover_mul(x, central(m)));
        c.expect(left == want && right == want, [&] {
          return "z^" + std::to_string(m) + " " + before.to_string() + " gave " + left.to_string() + ", expected " +
                 want.to_string();
        });
      });
    }
    out.push_back(c.finish());
  }
  {
    Check c(Suite::CoverLaws, "conjugation invariance", o.seed);
    for (std::size_t i = 0; i < n; ++i) {
      c.trial([&] {
        // A moderate conjugator keeps parabolic traces inside the classification band.
        auto x = random_element(c.rng);
        CoverElement g{ProjectiveMatrix::renormalize(random_frame(c.rng, 1.0)), pick(c.rng, -3, 3)};
        CoverClass before = cover_classify(x);
        CoverClass after = cover_classify(cover_mul(cover_mul(g, x), cover_inv(g)));
        c.expect(before == after, [&] { return before.to_string() + " conjugated to " + after.to_string(); });
      });
    }
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------- image theorems

enum class Factor { Hyp0, ParPlus0, ParMinus0, Par0, Ell1, EllMinus1 };

CoverElement sample_factor(Rng& rng, Factor f) {
  switch (f) {
    case Factor::Hyp0: return lift_to_class(random_hyperbolic(rng), hyp(0));
    case Factor::ParPlus0: return lift_to_class(random_parabolic(rng, 1), par_plus(0));
    case Factor::ParMinus0: return lift_to_class(random_parabolic(rng, -1), par_minus(0));
    case Factor::Par0: {
      int s = pick(rng, 0, 1) ? 1 : -1;
      return lift_to_class(random_parabolic(rng, s), par(s, 0));
    }
    case Factor::Ell1: return lift_to_class(random_elliptic(rng), ell(1));
    case Factor::EllMinus1: return lift_to_class(random_elliptic(rng), ell(-1));
  }
  return cover_identity();
}

struct ProductItem {
  std::string name;
  Factor left, right;
  PslType condition;
  std::vector<CoverClass> allowed;
  bool equality;  // every allowed class must also be reached
};

CheckResult product_item(const ProductItem& item, const SelftestOptions& o) {
  Check c(Suite::ImageTheorems, item.name, o.seed);
  const std::size_t want = scaled(1000, o.scale);
  std::set<std::string> reached;
  std::size_t attempts = 0;
  while (c.trials() < want && attempts < 400 * want) {
    ++attempts;
    c.trial([&] {
      auto x = sample_factor(c.rng, item.left), y = sample_factor(c.rng, item.right);
      auto p = cover_mul(x, y);
      if (!decisively(p.base, item.condition)) return;
      CoverClass k = cover_classify(p);
      reached.insert(k.to_string());
      c.expect(contains(item.allowed, k), [&] {
        return "product landed in " + k.to_string() + ", outside " + describe(item.allowed);
      });
    });
  }
  if (c.trials() < want) c.fail("only " + std::to_string(c.trials()) + " conditioned samples found");
  if (item.equality) {
    for (const auto& k : item.allowed) {
      if (!reached.count(k.to_string())) c.fail(k.to_string() + " was never reached");
    }
  }
  return c.finish();
}

std::vector<CheckResult> image_theorems(const SelftestOptions& o) {
  std::vector<CheckResult> out;
  {
    const std::vector<CoverClass> image = {hyp(-1), par_plus(-1), ell(-1),  par_plus(0), par_minus(0),
                                           center(0), hyp(0),      ell(1),   par_minus(1), hyp(1)};
    Check c(Suite::ImageTheorems, "commutator image", o.seed);
    const std::size_t n = scaled(10000, o.scale);
    for (std::size_t i = 0; i < n; ++i) {
      c.trial([&] {
        auto x = random_element(c.rng), y = random_element(c.rng);
        CoverClass k = cover_classify(cover_commutator(x, y));
        c.expect(contains(image, k), [&] { return "commutator in " + k.to_string(); });
      });
    }
    out.push_back(c.finish());
  }

  const auto H = PslType::Hyperbolic;
  const auto E = PslType::Elliptic;
  const std::vector<ProductItem> items = {
      {"product Hyp0 x Hyp0 -> Hyp", Factor::Hyp0, Factor::Hyp0, H, {hyp(-1), hyp(0), hyp(1)}, true},
      {"product Par0+ x Hyp0 -> Hyp", Factor::ParPlus0, Factor::Hyp0, H, {hyp(0), hyp(1)}, true},
      {"product Par0- x Hyp0 -> Hyp", Factor::ParMinus0, Factor::Hyp0, H, {hyp(0), hyp(-1)}, true},
      {"product Par0+ x Par0+ -> Hyp", Factor::ParPlus0, Factor::ParPlus0, H, {hyp(1)}, true},
      {"product Par0+ x Par0- -> Hyp", Factor::ParPlus0, Factor::ParMinus0, H, {hyp(0)}, true},
      {"product Par0- x Par0+ -> Hyp", Factor::ParMinus0, Factor::ParPlus0, H, {hyp(0)}, true},
      {"product Par0- x Par0- -> Hyp", Factor::ParMinus0, Factor::ParMinus0, H, {hyp(-1)}, true},
      {"product Par0+ x Par0+ -> Ell", Factor::ParPlus0, Factor::ParPlus0, E, {ell(1)}, true},
      {"product Par0- x Par0- -> Ell", Factor::ParMinus0, Factor::ParMinus0, E, {ell(-1)}, true},
      {"product Par0 x Ell1 -> Ell", Factor::Par0, Factor::Ell1, E, {ell(1)}, true},
      {"product Hyp0 x Hyp0 -> Ell", Factor::Hyp0, Factor::Hyp0, E, {ell(-1), ell(1)}, false},
      {"evimage-base Hyp0 x Par0+ -> Ell", Factor::Hyp0, Factor::ParPlus0, E, {ell(1)}, false},
      {"evimage-base Hyp0 x Par0- -> Ell", Factor::Hyp0, Factor::ParMinus0, E, {ell(-1)}, false},
      {"evimage-base Hyp0 x Ell1 -> Ell", Factor::Hyp0, Factor::Ell1, E, {ell(1)}, false},
      {"evimage-base Ell-1 x Ell1 -> Ell", Factor::EllMinus1, Factor::Ell1, E, {ell(-1), ell(1)}, false},
  };
  for (const auto& item : items) out.push_back(product_item(item, o));

  {
    // c_1..c_{p-1} positive parabolic, everything else generic: ev lands in Hyp_n or Ell_n
    // with 1 - 2g <= n <= 2g + p - 2.
    Check c(Suite::ImageTheorems, "evimage bound", o.seed);
    const std::vector<std::pair<int, int>> shapes = {{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}, {0, 5}};
    const std::size_t n = scaled(1000, o.scale);
    for (std::size_t i = 0; i < n; ++i) {
      auto [g, p] = shapes[i % shapes.size()];
      c.trial([&, g = g, p = p] {
        SurfacePresentation s(g, p);
        std::vector<ProjectiveMatrix> imgs;
        for (int j = 0; j < 2 * g; ++j) imgs.push_back(random_sl(c.rng));
        for (int k = 1; k < p; ++k) imgs.push_back(random_parabolic(c.rng, 1));
        Representation rep(s, imgs);
        if (std::abs(std::abs(rep.peripheral(p).trace()) - 2) < 1e-6) return;
        CoverClass k = cover_classify(evaluation_map(rep));
        bool ok = (k.tag == CoverTag::Hyp || k.tag == CoverTag::Ell) && k.n >= 1 - 2 * g && k.n <= 2 * g + p - 2;
        c.expect(ok, [&] { return s.label() + ": ev in " + k.to_string(); });
      });
    }
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------- sign rules

int sgn(double x) { return x > 0 ? 1 : -1; }

std::vector<CheckResult> sign_rules(const SelftestOptions& o) {
  std::vector<CheckResult> out;
  const std::size_t n = scaled(1000, o.scale);
  {
    Check c(Suite::SignRules, "offdiag (parabolic)", o.seed);
    for (int idx = -2; idx <= 2; ++idx) {
      for (int s : {1, -1}) {
        for (std::size_t i = 0; i < n; ++i) {
          c.trial([&] {
            CoverElement x = lift_to_class(random_parabolic(c.rng, s), par(s, idx));
            Matrix2 a = sl_projection(x);
            double tol = 1e-9 * std::max(1.0, a.max_abs());
            bool has12 = std::abs(a.a12) > tol, has21 = std::abs(a.a21) > tol;
            bool even = idx % 2 == 0;
            bool ok = has12 || has21;
            if (has12) ok = ok && s == (even ? sgn(a.a12) : -sgn(a.a12));
            if (has21) ok = ok && s == (even ? -sgn(a.a21) : sgn(a.a21));
            c.expect(ok, [&] {
              std::ostringstream m;
              m << par(s, idx).to_string() << " projects to a12=" << a.a12 << " a21=" << a.a21;
              return m.str();
            });
          });
        }
      }
    }
    out.push_back(c.finish());
  }
  {
    Check c(Suite::SignRules, "offdiag (elliptic)", o.seed);
    for (int idx : {-2, -1, 1, 2}) {
      for (std::size_t i = 0; i < n; ++i) {
        c.trial([&] {
          CoverElement x = lift_to_class(random_elliptic(c.rng), ell(idx));
          Matrix2 a = sl_projection(x);
          int sn = sgn(idx);
          bool ok = a.a12 != 0 && a.a21 != 0;
          if (idx % 2 != 0) {
            ok = ok && sn == sgn(a.a12) && sn == -sgn(a.a21);
          } else {
            ok = ok && sn == -sgn(a.a12) && sn == sgn(a.a21);
          }
          c.expect(ok, [&] {
            std::ostringstream m;
            m << ell(idx).to_string() << " projects to a12=" << a.a12 << " a21=" << a.a21;
            return m.str();
          });
        });
      }
    }
    out.push_back(c.finish());
  }
  {
    // Elements are built as z^n times a Hyp(0) lift, so the class is known independently of
    // the classifier; the SL trace sign must alternate with n.
    Check c(Suite::SignRules, "trace parity", o.seed);
    for (int idx = -2; idx <= 2; ++idx) {
      for (std::size_t i = 0; i < n; ++i) {
        c.trial([&] {
          CoverElement h0 = lift_to_class(random_hyperbolic(c.rng), hyp(0));
          CoverElement x = cover_mul(central(idx), h0);
          double t = sl_projection(x).trace();
          int want = idx % 2 == 0 ? 1 : -1;
          c.expect(cover_classify(x) == hyp(idx) && sgn(t) == want, [&] {
            return "z^" + std::to_string(idx) + " Hyp(0) has class " + cover_classify(x).to_string() +
                   " and SL trace " + std::to_string(t);
          });
        });
      }
    }
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------- euler class

Representation random_hp_rep(Rng& rng, int g, int p) {
  SurfacePresentation s(g, p);
  for (;;) {
    std::vector<ProjectiveMatrix> imgs;
    for (int j = 0; j < 2 * g; ++j) imgs.push_back(random_sl(rng, 1.0));
    for (int k = 1; k < p; ++k) {
      switch (pick(rng, 0, 2)) {
        case 0: imgs.push_back(random_parabolic(rng, 1)); break;
        case 1: imgs.push_back(random_parabolic(rng, -1)); break;
        default: imgs.push_back(random_hyperbolic(rng)); break;
      }
    }
    Representation rep(s, imgs);
    if (decisively(rep.peripheral(p), PslType::Hyperbolic)) return rep;
  }
}

// Lifted relator with arbitrary deck indices on the handle generators, read off as G(0) / pi;
// for a central element z^n this is n.
double relator_turns(const Representation& rep, Rng& rng) {
  const auto& s = rep.surface();
  CoverElement acc = cover_identity();
  for (int j = 1; j <= s.genus; ++j) {
    CoverElement a{rep.image({'a', j}), pick(rng, -3, 3)};
    CoverElement b{rep.image({'b', j}), pick(rng, -3, 3)};
    acc = cover_mul(acc, cover_commutator(a, b));
  }
  for (int i = 1; i <= s.punctures; ++i) acc = cover_mul(acc, special_lift(rep.peripheral(i), LiftMode::ClosureHyp0));
  return angle_lift(acc, 0.0) / kPi;
}

SignVector negated(SignVector s) {
  for (auto& x : s) x = -x;
  return s;
}

CheckResult forced_pants(const SelftestOptions& o, int s2, int expected) {
  std::string name = std::string("pants (+,") + (s2 > 0 ? "+" : "-") + ",0) forces e = " + std::to_string(expected);
  Check c(Suite::Euler, name, o.seed);
  const std::size_t n = scaled(1000, o.scale);
  while (c.trials() < n) {
    c.trial([&] {
      Representation rep(SurfacePresentation(0, 3), {random_parabolic(c.rng, 1), random_parabolic(c.rng, s2)});
      if (!decisively(rep.peripheral(3), PslType::Hyperbolic)) return;
      int e = euler_class(rep);
      SignVector sv = sign_vector(rep);
      c.expect(e == expected && sv == SignVector{1, s2, 0}, [&] {
        return "e = " + std::to_string(e) + " with signs " + format_signs(sv);
      });
    });
  }
  return c.finish();
}

std::vector<CheckResult> euler_checks(const SelftestOptions& o) {
  std::vector<CheckResult> out;
  out.push_back(forced_pants(o, 1, 1));
  out.push_back(forced_pants(o, -1, 0));

  const std::vector<std::pair<int, int>> shapes = {{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}};
  const std::size_t n = scaled(1000, o.scale);
  auto over_random_reps = [&](const std::string& name,
                              const std::function<void(Check&, const Representation&)>& body) {
    Check c(Suite::Euler, name, o.seed);
    for (std::size_t i = 0; i < n; ++i) {
      auto [g, p] = shapes[i % shapes.size()];
      c.trial([&, g = g, p = p] { body(c, random_hp_rep(c.rng, g, p)); });
    }
    out.push_back(c.finish());
  };

  over_random_reps("lift-choice independence", [](Check& c, const Representation& rep) {
    int e = euler_class(rep);
    double turns = relator_turns(rep, c.rng);
    c.expect(std::abs(turns - e) < 1e-6, [&] {
      return "relator lifted to G(0) = " + std::to_string(turns) + " pi, e = " + std::to_string(e);
    });
  });
  over_random_reps("conjugation invariance", [](Check& c, const Representation& rep) {
    Representation r2 = rep.conjugated(random_sl(c.rng, 1.0));
    c.expect(euler_class(r2) == euler_class(rep) && sign_vector(r2) == sign_vector(rep),
             [] { return std::string("conjugation changed e or s"); });
  });
  over_random_reps("pgl flip negation", [](Check& c, const Representation& rep) {
    Representation f = rep.flipped();
    c.expect(euler_class(f) == -euler_class(rep) && sign_vector(f) == negated(sign_vector(rep)), [&] {
      return "e " + std::to_string(euler_class(rep)) + " flipped to " + std::to_string(euler_class(f));
    });
  });
  over_random_reps("milnor-wood bounds", [](Check& c, const Representation& rep) {
    int e = euler_class(rep);
    int chi = rep.surface().euler_characteristic();
    SignVector sv = sign_vector(rep);
    int plus = static_cast<int>(std::count(sv.begin(), sv.end(), 1));
    int minus = static_cast<int>(std::count(sv.begin(), sv.end(), -1));
    c.expect(chi + plus <= e && e <= -chi - minus, [&] {
      return rep.surface().label() + " has e = " + std::to_string(e) + " with signs " + format_signs(sv);
    });
  });

  {
    Check c(Suite::Euler, "additivity across standard splittings", o.seed);
    const std::vector<BuildRequest> requests = {
        {0, 4, 2, {1, 1, 1, 1}, 0},   {0, 4, 1, {1, 1, 1, -1}, 0}, {0, 4, -1, {-1, -1, -1, 1}, 0},
        {1, 2, 2, {1, 1}, 0},          {1, 2, 1, {1, -1}, 0},       {2, 1, 2, {-1}, 0},
        {0, 5, 2, {1, 1, 1, 1, -1}, 0}, {1, 3, 2, {1, 1, -1}, 0},    {0, 5, -3, {-1, -1, -1, -1, -1}, 0},
        {2, 2, 3, {1, -1}, 0},
    };
    const std::size_t reps = scaled(100, o.scale);
    for (std::size_t i = 0; i < reps; ++i) {
      BuildRequest req = requests[i % requests.size()];
      req.seed = derive_seed(o.seed, i);
      c.trial([&] {
        Representation rep = build_rep(req);
        const auto& s = rep.surface();
        int e = euler_class(rep);
        bool ok = true;
        std::string where;
        for (int j = 0; j <= s.genus; ++j) {
          for (int k = 0; k <= s.punctures; ++k) {
            if (!is_standard_split(s, {j, k})) continue;
            try {
              auto [l, r] = restrict_rep(rep, {j, k});
              if (euler_class(l) + euler_class(r) != e) {
                ok = false;
                where = s.label() + " split (" + std::to_string(j) + "," + std::to_string(k) + ")";
              }
            } catch (const Error& err) {
              if (err.code() != ErrorCode::BoundaryElliptic) throw;
            }
          }
        }
        c.expect(ok, [&] { return "pieces do not sum to e on " + where; });
      });
    }
    out.push_back(c.finish());
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const SelftestOptions& opts) {
  switch (suite) {
    case Suite::CoverLaws: return cover_laws(opts);
    case Suite::ImageTheorems: return image_theorems(opts);
    case Suite::SignRules: return sign_rules(opts);
    case Suite::Euler: return euler_checks(opts);
  }
  return {};
}

std::vector<CheckResult> run_selftest(const SelftestOptions& opts) {
  std::vector<CheckResult> all;
  for (Suite s : {Suite::CoverLaws, Suite::ImageTheorems, Suite::SignRules, Suite::Euler}) {
    auto part = run_suite(s, opts);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace thyp
