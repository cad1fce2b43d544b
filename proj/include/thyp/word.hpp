#pragma once

#include <compare>
#include <string>
#include <vector>

namespace thyp {

/// Generator a_i, b_i or c_i (1-based index).
struct Generator {
  char kind = 'a';
  int index = 1;

  auto operator<=>(const Generator&) const = default;
  std::string name() const { return std::string(1, kind) + std::to_string(index); }
};

struct Letter {
  Generator gen;
  int exp = 1;  // +1 or -1

  bool operator==(const Letter&) const = default;
  /// Orders by generator, positive power first.
  std::strong_ordering operator<=>(const Letter& o) const {
    if (auto c = gen <=> o.gen; c != 0) return c;
    return o.exp <=> exp;
  }
  Letter inverse() const { return {gen, -exp}; }
};

using Word = std::vector<Letter>;

inline Letter letter(char kind, int index, int exp = 1) { return {{kind, index}, exp}; }

Word parse_word(const std::string& text);
std::string to_string(const Word& w);

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& x, const Word& y);
Word commutator_word(const Word& x, const Word& y);
Word cyclic_reduce(const Word& w);
/// Least rotation of the cyclically reduced word or of its inverse.
Word canonical_form(const Word& w);

}  // namespace thyp
