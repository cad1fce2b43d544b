#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thyp/cover.hpp"
#include "thyp/random.hpp"
#include "thyp/surface.hpp"

namespace thyp {

enum class FactorKind { Hyp0, ParPlus0, ParMinus0, Ell1, EllMinus1 };

std::string to_string(FactorKind k);
FactorKind parse_factor_kind(const std::string& s);
CoverClass factor_class(FactorKind k);
FactorKind mirror(FactorKind k);
/// Lift of p into the component named by k.
CoverElement lift_factor(const ProjectiveMatrix& p, FactorKind k);

/// Whether the product tables promise that target class is reachable from k1 x k2.
bool product_reachable(FactorKind k1, FactorKind k2, const CoverClass& target);
/// Membership in the image of the commutator map on the cover.
bool in_commutator_image(const CoverClass& c);

/// (x, y) in the components k1, k2 with x y = target.
std::pair<CoverElement, CoverElement> solve_product(FactorKind k1, FactorKind k2, const CoverElement& target,
                                                    Rng& rng);

/// (x, y) with [x, y] = target. Without randomisation the trace triple lies on the
/// slice x = y = z (or x = y = 3 when the target trace is at least 2).
std::pair<CoverElement, CoverElement> solve_commutator(const CoverElement& target, Rng& rng,
                                                       bool randomize = false);

/// Representation of S(g,p) with euler class -chi, c_1..c_{p-1} positive parabolic and c_p = boundary.
Representation build_boundary_extremal(int genus, int punctures, const ProjectiveMatrix& boundary, Rng& rng);

struct BuildRequest {
  int genus = 0;
  int punctures = 3;
  int euler = 0;
  SignVector signs;
  std::uint64_t seed = 0;
};

/// Type-preserving representation with the requested euler class and signs.
/// Supported: extremal |n| = -chi with uniform signs, and |n| = -chi - 1 with one opposite sign.
Representation build_rep(const BuildRequest& req);

/// Twist along a standard separating curve gamma_{j,k} by the fraction t of its translation length.
Representation twist_deform(const Representation& rep, const Word& curve, double t);

/// count representations from seeds derived from req.seed.
std::vector<Representation> sample(const BuildRequest& req, int count);

/// Throws InfeasibleRequest unless the Milnor-Wood style bounds guarantee existence.
void check_feasible(const BuildRequest& req);

}  // namespace thyp
