#include <fstream>
#include <json.hpp>

#include "doctest.h"
#include "thyp/audit.hpp"
#include "thyp/constructors.hpp"
#include "thyp/curves.hpp"

using namespace thyp;

namespace {

Word w(const char* s) { return parse_word(s); }

}  // namespace

TEST_CASE("classify_curve examples") {
  SurfacePresentation s12(1, 2);
  auto c1 = classify_curve(w("c1"), s12);
  CHECK(c1.kind == CurveKind::Peripheral);
  CHECK(c1.peripheral_index == 1);
  CHECK(classify_curve(w("a1"), s12).kind == CurveKind::NonSeparating);
  CHECK(classify_curve(w("a1 b1 a1^-1 b1^-1"), s12).kind == CurveKind::SeparatingNonPeripheral);
  auto c2 = classify_curve(w("c2"), s12);
  CHECK(c2.kind == CurveKind::Peripheral);
  CHECK(c2.peripheral_index == 2);
  // c2 written out through the relator, and conjugated.
  auto c2w = classify_curve(w("b1 a1 c1^-1 b1 a1 b1^-1 a1^-1 a1^-1 b1^-1"), s12);
  CHECK(c2w.kind == CurveKind::Peripheral);
  CHECK(c2w.peripheral_index == 2);

  SurfacePresentation s04(0, 4);
  CHECK(classify_curve(w("c1 c2"), s04).kind == CurveKind::SeparatingNonPeripheral);
  CHECK(classify_curve(w("c1 c2 c3"), s04).kind == CurveKind::Peripheral);
}

TEST_CASE("validate_auto examples") {
  SurfacePresentation s04(0, 4);
  McgAuto braid{"sigma1", {{{'c', 1}, w("c1 c2 c1^-1")}, {{'c', 2}, w("c1")}}};
  CHECK(validate_auto(braid, s04));

  SurfacePresentation s11(1, 1);
  McgAuto twist{"twist", {{{'a', 1}, w("a1 b1")}}};
  CHECK(validate_auto(twist, s11));

  McgAuto square{"square", {{{'a', 1}, w("a1 a1")}}};
  CHECK_FALSE(validate_auto(square, s11));

  // An automorphism that does not preserve the relator class.
  McgAuto swap{"swap", {{{'a', 1}, w("b1")}, {{'b', 1}, w("a1")}}};
  CHECK_FALSE(validate_auto(swap, s11));
}

TEST_CASE("default automorphisms validate") {
  for (auto [g, p] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 6}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
    SurfacePresentation s(g, p);
    for (const auto& f : default_automorphisms(s)) {
      INFO(s.label() << " " << f.name);
      CHECK(validate_auto(f, s));
    }
  }
}

TEST_CASE("enumerate_scc") {
  SurfacePresentation s04(0, 4);
  auto d0 = enumerate_scc(s04, 0);
  CHECK(d0.curves == seed_curves(s04));
  CHECK(enumerate_scc(s04, 3).curves.size() > enumerate_scc(s04, 2).curves.size());

  for (auto [g, p] : std::vector<std::pair<int, int>>{{0, 4}, {0, 5}, {1, 2}, {2, 1}}) {
    SurfacePresentation s(g, p);
    auto set = enumerate_scc(s, 3);
    for (const Word& c : set.curves) {
      CHECK_FALSE(c.empty());
      CHECK(canonical_form(c) == c);
      CHECK(classify_curve(c, s).kind != CurveKind::Peripheral);
    }
  }
  CHECK_THROWS(enumerate_scc(s04, -1));
}

TEST_CASE("enumerate_scc counts match the golden file") {
  std::ifstream in(std::string(THYP_SOURCE_DIR) + "/tests/golden/scc_counts.json");
  REQUIRE(in);
  auto golden = nlohmann::json::parse(in);
  for (auto& [key, counts] : golden.items()) {
    int g = key[0] - '0', p = key[2] - '0';
    for (std::size_t d = 0; d < counts.size(); ++d) {
      INFO(key << " depth " << d);
      CHECK(enumerate_scc({g, p}, static_cast<int>(d)).curves.size() == counts[d].get<std::size_t>());
    }
  }
}

TEST_CASE("enumerate_scc_at_least") {
  auto set = enumerate_scc_at_least({0, 4}, 4, 500);
  CHECK(set.curves.size() >= 500);
  CHECK(set.depth == 8);
  auto capped = enumerate_scc_at_least({0, 4}, 2, 100000, 3);
  CHECK(capped.depth == 3);
}

TEST_CASE("every enumerated curve is hyperbolic under a Fuchsian representation") {
  for (auto [g, p] : std::vector<std::pair<int, int>>{{0, 4}, {1, 2}, {2, 1}}) {
    SurfacePresentation s(g, p);
    Representation rep = build_rep({g, p, -s.euler_characteristic(), SignVector(static_cast<std::size_t>(p), 1), 31});
    for (const Word& c : enumerate_scc(rep.surface(), 4).curves) {
      INFO(rep.surface().label() << " " << to_string(c));
      CHECK(classify_psl(rep.eval(c)) == PslType::Hyperbolic);
    }
  }
}
