#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thyp/surface.hpp"
#include "thyp/word.hpp"

namespace thyp {

enum class CurveKind { Peripheral, SeparatingNonPeripheral, NonSeparating };

struct CurveClassification {
  CurveKind kind;
  int peripheral_index = 0;  // set for Peripheral
};

std::string to_string(CurveKind k);
CurveClassification classify_curve(const Word& w, const SurfacePresentation& s);

/// Endomorphism of the free group on the free generators; unlisted generators are fixed.
struct McgAuto {
  std::string name;
  std::map<Generator, Word> images;

  Word apply(const Word& w, const SurfacePresentation& s) const;
};

/// Inverse on generators, found by greedy Nielsen reduction of the image tuple.
std::optional<McgAuto> invert_auto(const McgAuto& f, const SurfacePresentation& s);
/// Free-group automorphism that permutes the peripheral classes, preserving orientation.
bool validate_auto(const McgAuto& f, const SurfacePresentation& s);

/// Handle twists, braid moves and handle/puncture slides, with their inverses.
std::vector<McgAuto> default_automorphisms(const SurfacePresentation& s);

std::vector<Word> seed_curves(const SurfacePresentation& s);

struct CurveSet {
  std::vector<Word> curves;  // canonical forms, sorted by length then letters
  std::size_t dropped = 0;   // orbit elements over the length cap
  int depth = 0;
};

inline constexpr std::size_t kMaxCurveLetters = 512;

CurveSet enumerate_scc(const SurfacePresentation& s, int depth, std::size_t max_letters = kMaxCurveLetters);
/// Smallest depth >= min_depth (and <= max_depth) yielding at least min_count curves.
CurveSet enumerate_scc_at_least(const SurfacePresentation& s, int min_depth, std::size_t min_count,
                                int max_depth = 12);

}  // namespace thyp
