#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thyp/cover.hpp"
#include "thyp/word.hpp"

namespace thyp {

/// <a1, b1, ..., ag, bg, c1, ..., cp | [a1,b1]...[ag,bg] c1...cp>, with c_p implied.
struct SurfacePresentation {
  int genus = 0;
  int punctures = 3;

  SurfacePresentation() = default;
  SurfacePresentation(int g, int p);

  int euler_characteristic() const { return 2 - 2 * genus - punctures; }
  /// Free generators in storage order a1, b1, ..., ag, bg, c1, ..., c_{p-1}.
  std::vector<Generator> free_generators() const;
  int free_count() const { return 2 * genus + punctures - 1; }
  bool declares(const Generator& g) const;
  bool is_free(const Generator& g) const;
  /// Defining word of c_p over the free generators.
  Word last_peripheral_word() const;
  /// Word for c_i; for i = p this is last_peripheral_word().
  Word peripheral_word(int i) const;
  /// Rewrites c_p in terms of the free generators.
  Word expand(const Word& w) const;
  /// gamma_{j,k} = [a1,b1]...[aj,bj] c1...ck.
  Word splitting_word(int j, int k) const;
  std::string label() const;

  bool operator==(const SurfacePresentation&) const = default;
};

class Representation {
 public:
  Representation(SurfacePresentation s, std::vector<ProjectiveMatrix> free_images);

  const SurfacePresentation& surface() const { return surface_; }
  const std::vector<ProjectiveMatrix>& free_images() const { return free_; }
  ProjectiveMatrix image(const Generator& g) const;
  ProjectiveMatrix peripheral(int i) const { return image({'c', i}); }
  ProjectiveMatrix eval(const Word& w) const;

  Representation conjugated(const ProjectiveMatrix& g) const;
  Representation flipped() const;
  /// Replaces the images of the given free generators.
  Representation with_images(const std::vector<std::pair<Generator, ProjectiveMatrix>>& changes) const;

  std::optional<std::uint64_t> seed;
  std::string origin;

 private:
  int slot(const Generator& g) const;

  SurfacePresentation surface_;
  std::vector<ProjectiveMatrix> free_;
  std::vector<Matrix2> all_;  // free images followed by c_p
  std::vector<Matrix2> inv_;
};

using SignVector = std::vector<int>;

/// True when every peripheral image is hyperbolic or parabolic.
bool is_hp(const Representation& rep);
bool is_type_preserving(const Representation& rep);
int euler_class(const Representation& rep);
SignVector sign_vector(const Representation& rep);
std::string format_signs(const SignVector& s);
SignVector parse_signs(const std::string& text);

enum class MwVerdict { FeasibleIff, FeasibleSufficient, Infeasible, Unknown };
std::string to_string(MwVerdict v);
MwVerdict mw_bounds(int genus, int punctures, int n, const SignVector& s);

/// Product of the commutator lifts and the evaluation lifts of c_1..c_{p-1}.
CoverElement evaluation_map(const Representation& rep);

/// Relabels so that c_p becomes c_1 and c_k becomes c_{k+1}, conjugating every a_j, b_j by the
/// image of c_p. The relator maps to a conjugate of itself, so e and the peripheral classes
/// (cyclically permuted) are preserved.
Representation rotate_punctures(const Representation& rep);

/// Curve gamma_{j,k}; only curves bounding a consecutive block of the boundary sequence are simple.
struct SplittingSpec {
  int j = 0;
  int k = 0;
};
bool is_standard_split(const SurfacePresentation& s, const SplittingSpec& split);
/// Left piece has boundary gamma^-1 last; right piece has boundary gamma last.
std::pair<Representation, Representation> restrict_rep(const Representation& rep, const SplittingSpec& split);

}  // namespace thyp
