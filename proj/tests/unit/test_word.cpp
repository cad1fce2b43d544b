#include <algorithm>
#include <random>

#include "doctest.h"
#include "thyp/errors.hpp"
#include "thyp/word.hpp"

using namespace thyp;

namespace {

Word w(const char* s) { return parse_word(s); }

Word random_word(std::mt19937_64& rng, int max_len = 12) {
  static const Generator gens[] = {{'a', 1}, {'b', 1}, {'a', 2}, {'b', 2}, {'c', 1}, {'c', 2}};
  int len = std::uniform_int_distribution<int>(1, max_len)(rng);
  Word out;
  for (int i = 0; i < len; ++i) {
    out.push_back({gens[rng() % 6], rng() % 2 ? 1 : -1});
  }
  return out;
}

// Minimum over every rotation of the fully reduced cyclic word and of its inverse.
Word brute_canonical(Word x) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (x[i].gen == x[i + 1].gen && x[i].exp == -x[i + 1].exp) {
        x.erase(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
    if (!changed && x.size() >= 2 && x.front().gen == x.back().gen && x.front().exp == -x.back().exp) {
      x.erase(x.begin());
      x.pop_back();
      changed = true;
    }
  }
  if (x.empty()) return x;
  Word inv;
  for (auto it = x.rbegin(); it != x.rend(); ++it) inv.push_back(it->inverse());
  Word best = x;
  for (const Word& base : {x, inv}) {
    Word r = base;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::rotate(r.begin(), r.begin() + 1, r.end());
      best = std::min(best, r);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(to_string(w("a1 b1 a1^-1 b1^-1")) == "a1 b1 a1^-1 b1^-1");
  CHECK(w("c3^+1") == Word{letter('c', 3)});
  CHECK(w("").empty());
  CHECK_THROWS_AS(w("d1"), Error);
  CHECK_THROWS_AS(w("a0"), Error);
  CHECK_THROWS_AS(w("a1^2"), Error);
}

TEST_CASE("canonical_form examples") {
  CHECK(canonical_form(w("a1 b1 b1^-1")) == w("a1"));
  CHECK(canonical_form(w("b1 a1 b1^-1")) == w("a1"));
  CHECK(canonical_form(w("a1^-1")) == w("a1"));
  CHECK(canonical_form(w("a1 a1^-1")).empty());
}

TEST_CASE("word helpers") {
  CHECK(commutator_word(w("a1"), w("b1")) == w("a1 b1 a1^-1 b1^-1"));
  CHECK(inverse(w("a1 c2^-1")) == w("c2 a1^-1"));
  CHECK(free_reduce(concat(w("a1 b1"), w("b1^-1 c1"))) == w("a1 c1"));
  CHECK(cyclic_reduce(w("c1 a1 b1 c1^-1")) == w("a1 b1"));
}

TEST_CASE("canonical_form properties on random words") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    Word x = random_word(rng);
    Word c = canonical_form(x);
    REQUIRE(c == brute_canonical(x));
    CHECK(canonical_form(c) == c);
    CHECK(canonical_form(inverse(x)) == c);
    Word rot = x;
    std::rotate(rot.begin(), rot.begin() + static_cast<long>(rng() % rot.size()), rot.end());
    CHECK(canonical_form(rot) == c);
    // Conjugating by a random word leaves the cyclic class unchanged.
    Word g = random_word(rng, 4);
    CHECK(canonical_form(concat(concat(g, x), inverse(g))) == c);
  }
}
