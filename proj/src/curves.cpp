#include "thyp/curves.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "thyp/errors.hpp"

namespace thyp {

namespace {

// Least rotation of the cyclic reduction, without identifying inverses.
Word oriented_form(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  Word best = c;
  Word cur = c;
  for (std::size_t i = 1; i < c.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const Letter& l : w) {
      std::size_t x = static_cast<std::size_t>(l.gen.kind) * 131 + static_cast<std::size_t>(l.gen.index) * 3 +
                      static_cast<std::size_t>(l.exp + 1);
      h = (h ^ x) * 1099511628211ull;
    }
    return h;
  }
};

bool shortlex_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

}  // namespace

std::string to_string(CurveKind k) {
  switch (k) {
    case CurveKind::Peripheral: return "peripheral";
    case CurveKind::SeparatingNonPeripheral: return "separating";
    case CurveKind::NonSeparating: return "non-separating";
  }
  return "?";
}

CurveClassification classify_curve(const Word& w, const SurfacePresentation& s) {
  Word c = canonical_form(s.expand(w));
  for (int i = 1; i <= s.punctures; ++i) {
    if (c == canonical_form(s.expand(s.peripheral_word(i)))) return {CurveKind::Peripheral, i};
  }
  std::map<Generator, int> sums;
  for (const Letter& l : c) {
    if (l.gen.kind != 'c') sums[l.gen] += l.exp;
  }
  for (const auto& [g, n] : sums) {
    if (n != 0) return {CurveKind::NonSeparating, 0};
  }
  return {CurveKind::SeparatingNonPeripheral, 0};
}

Word McgAuto::apply(const Word& w, const SurfacePresentation& s) const {
  Word out;
  for (const Letter& l : s.expand(w)) {
    auto it = images.find(l.gen);
    if (it == images.end()) {
      out.push_back(l);
    } else {
      const Word& img = it->second;
      if (l.exp > 0) {
        out.insert(out.end(), img.begin(), img.end());
      } else {
        for (auto r = img.rbegin(); r != img.rend(); ++r) out.push_back(r->inverse());
      }
    }
  }
  return free_reduce(out);
}

std::optional<McgAuto> invert_auto(const McgAuto& f, const SurfacePresentation& s) {
  std::vector<Generator> gens = s.free_generators();
  std::size_t n = gens.size();
  for (const auto& [g, w] : f.images) {
    if (!s.is_free(g)) return std::nullopt;
    for (const Letter& l : w) {
      if (!s.is_free(l.gen)) return std::nullopt;
    }
  }
  // tuple[i] is the current element; track[i] spells it over the image symbols y_i = f(x_i),
  // written with the generator x_i standing in for y_i.
  std::vector<Word> tuple, track;
  for (const Generator& g : gens) {
    tuple.push_back(f.apply({Letter{g, 1}}, s));
    track.push_back({Letter{g, 1}});
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int e : {1, -1}) {
          Word tj = e > 0 ? tuple[j] : inverse(tuple[j]);
          Word wj = e > 0 ? track[j] : inverse(track[j]);
          Word right = concat(tuple[i], tj);
          if (right.size() < tuple[i].size()) {
            tuple[i] = right;
            track[i] = concat(track[i], wj);
            changed = true;
            continue;
          }
          Word left = concat(tj, tuple[i]);
          if (left.size() < tuple[i].size()) {
            tuple[i] = left;
            track[i] = concat(wj, track[i]);
            changed = true;
          }
        }
      }
    }
  }
  McgAuto inv{f.name + "^-1", {}};
  std::set<Generator> hit;
  for (std::size_t i = 0; i < n; ++i) {
    if (tuple[i].size() != 1) return std::nullopt;
    const Letter& l = tuple[i][0];
    if (!hit.insert(l.gen).second) return std::nullopt;
    // f(track_i) = l, so f^-1(l.gen) = track_i^(l.exp).
    inv.images[l.gen] = l.exp > 0 ? track[i] : inverse(track[i]);
  }
  for (const Generator& g : gens) {
    Word back = f.apply(inv.apply({Letter{g, 1}}, s), s);
    if (back != Word{Letter{g, 1}}) return std::nullopt;
  }
  return inv;
}

bool validate_auto(const McgAuto& f, const SurfacePresentation& s) {
  if (!invert_auto(f, s)) return false;
  std::vector<Word> targets;
  for (int i = 1; i <= s.punctures; ++i) targets.push_back(oriented_form(s.expand(s.peripheral_word(i))));
  std::vector<bool> used(targets.size(), false);
  for (int i = 1; i <= s.punctures; ++i) {
    Word img = oriented_form(f.apply(s.peripheral_word(i), s));
    bool matched = false;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!used[t] && targets[t] == img) {
        used[t] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<McgAuto> default_automorphisms(const SurfacePresentation& s) {
  std::vector<McgAuto> base;
  for (int j = 1; j <= s.genus; ++j) {
    Letter a = letter('a', j), b = letter('b', j);
    base.push_back({"Ta" + std::to_string(j), {{a.gen, {a, b}}}});
    base.push_back({"Tb" + std::to_string(j), {{b.gen, {b, a}}}});
  }
  int p = s.punctures;
  for (int i = 1; i + 1 <= p; ++i) {
    Letter ci = letter('c', i), cn = letter('c', i + 1);
    McgAuto f{"s" + std::to_string(i), {}};
    if (i + 1 < p) {
      f.images[ci.gen] = {ci, cn, ci.inverse()};
      f.images[cn.gen] = {ci};
    } else {
      f.images[ci.gen] = free_reduce(concat({ci}, concat(s.last_peripheral_word(), {ci.inverse()})));
    }
    base.push_back(f);
  }
  if (s.genus >= 1 && p >= 2) {
    // Slides the first puncture around the last handle; fixes [a_g,b_g] c_1 letter for letter.
    Letter a = letter('a', s.genus), b = letter('b', s.genus), c = letter('c', 1);
    base.push_back({"P" + std::to_string(s.genus),
                    {{a.gen, {a, c}},
                     {b.gen, {c.inverse(), b, c}},
                     {c.gen, {c.inverse(), b, c, b.inverse(), c}}}});
  }
  std::vector<McgAuto> out;
  for (const McgAuto& f : base) {
    if (!validate_auto(f, s)) {
      throw Error(ErrorCode::SelfVerificationFailed, "default automorphism " + f.name + " failed validation");
    }
    out.push_back(f);
    out.push_back(*invert_auto(f, s));
  }
  return out;
}

std::vector<Word> seed_curves(const SurfacePresentation& s) {
  std::vector<Word> blocks;
  for (int j = 1; j <= s.genus; ++j) blocks.push_back(commutator_word({letter('a', j)}, {letter('b', j)}));
  for (int i = 1; i <= s.punctures; ++i) blocks.push_back(s.expand(s.peripheral_word(i)));
  std::set<Word> seen;
  std::vector<Word> out;
  auto add = [&](const Word& w) {
    Word c = canonical_form(s.expand(w));
    if (c.empty()) return;
    if (classify_curve(c, s).kind == CurveKind::Peripheral) return;
    if (seen.insert(c).second) out.push_back(c);
  };
  for (int j = 1; j <= s.genus; ++j) {
    add({letter('a', j)});
    add({letter('b', j)});
  }
  int n = static_cast<int>(blocks.size());
  for (int start = 0; start < n; ++start) {
    Word w;
    for (int len = 1; len < n; ++len) {
      w = concat(w, blocks[static_cast<std::size_t>((start + len - 1) % n)]);
      add(w);
    }
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

CurveSet enumerate_scc(const SurfacePresentation& s, int depth, std::size_t max_letters) {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be non-negative");
  auto autos = default_automorphisms(s);
  CurveSet out;
  out.depth = depth;
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> frontier = seed_curves(s);
  for (const Word& w : frontier) seen.insert(w);
  for (int d = 0; d < depth; ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const McgAuto& f : autos) {
        Word c = canonical_form(f.apply(w, s));
        if (c.size() > max_letters) {
          ++out.dropped;
          continue;
        }
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  out.curves.assign(seen.begin(), seen.end());
  std::sort(out.curves.begin(), out.curves.end(), shortlex_less);
  return out;
}

CurveSet enumerate_scc_at_least(const SurfacePresentation& s, int min_depth, std::size_t min_count, int max_depth) {
  CurveSet set;
  for (int d = min_depth; d <= std::max(min_depth, max_depth); ++d) {
    set = enumerate_scc(s, d);
    if (set.curves.size() >= min_count) break;
  }
  return set;
}

}  // namespace thyp
