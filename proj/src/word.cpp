#include "thyp/word.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "thyp/errors.hpp"

namespace thyp {

Word parse_word(const std::string& text) {
  static const std::regex token(R"(([abc])(\d+)(?:\^([+-]?1))?)");
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::smatch m;
    if (!std::regex_match(tok, m, token)) throw Error(ErrorCode::ParseError, "bad letter '" + tok + "'");
    int idx = std::stoi(m[2]);
    if (idx < 1) throw Error(ErrorCode::ParseError, "generator index must be positive: " + tok);
    int exp = m[3].matched ? std::stoi(m[3]) : 1;
    w.push_back({{m[1].str()[0], idx}, exp});
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen.name();
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return free_reduce(out);
}

Word commutator_word(const Word& x, const Word& y) {
  return concat(concat(x, y), concat(inverse(x), inverse(y)));
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].gen == r[hi - 1].gen && r[lo].exp == -r[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

namespace {

Word least_rotation(const Word& w) {
  std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter& x = w[(s + i) % n];
      const Letter& y = w[(best + i) % n];
      if (x < y) {
        best = s;
        break;
      }
      if (y < x) break;
    }
  }
  Word out(w.begin() + static_cast<long>(best), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(best));
  return out;
}

}  // namespace

Word canonical_form(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  Word x = least_rotation(c);
  Word y = least_rotation(inverse(c));
  return std::min(x, y);
}

}  // namespace thyp
