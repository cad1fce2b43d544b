#include "thyp/surface.hpp"

#include <cmath>
#include <sstream>

#include "thyp/errors.hpp"

namespace thyp {

SurfacePresentation::SurfacePresentation(int g, int p) : genus(g), punctures(p) {
  if (g < 0 || p < 1) throw Error(ErrorCode::InvalidArgument, "need genus >= 0 and punctures >= 1");
  if (euler_characteristic() >= 0) {
    throw Error(ErrorCode::InvalidArgument, "surface " + label() + " has non-negative Euler characteristic");
  }
}

std::vector<Generator> SurfacePresentation::free_generators() const {
  std::vector<Generator> out;
  for (int j = 1; j <= genus; ++j) {
    out.push_back({'a', j});
    out.push_back({'b', j});
  }
  for (int i = 1; i < punctures; ++i) out.push_back({'c', i});
  return out;
}

bool SurfacePresentation::declares(const Generator& g) const {
  if (g.index < 1) return false;
  if (g.kind == 'a' || g.kind == 'b') return g.index <= genus;
  return g.kind == 'c' && g.index <= punctures;
}

bool SurfacePresentation::is_free(const Generator& g) const {
  return declares(g) && !(g.kind == 'c' && g.index == punctures);
}

Word SurfacePresentation::last_peripheral_word() const { return inverse(splitting_word(genus, punctures - 1)); }

Word SurfacePresentation::peripheral_word(int i) const {
  if (i == punctures) return last_peripheral_word();
  return {letter('c', i)};
}

Word SurfacePresentation::expand(const Word& w) const {
  Word out;
  Word cp = last_peripheral_word();
  Word cpi = inverse(cp);
  for (const Letter& l : w) {
    if (!declares(l.gen)) throw Error(ErrorCode::UnknownGenerator, l.gen.name() + " on " + label());
    if (l.gen.kind == 'c' && l.gen.index == punctures) {
      const Word& e = l.exp > 0 ? cp : cpi;
      out.insert(out.end(), e.begin(), e.end());
    } else {
      out.push_back(l);
    }
  }
  return free_reduce(out);
}

Word SurfacePresentation::splitting_word(int j, int k) const {
  Word w;
  for (int h = 1; h <= j; ++h) {
    w = concat(w, commutator_word({letter('a', h)}, {letter('b', h)}));
  }
  for (int i = 1; i <= k; ++i) w.push_back(letter('c', i));
  return free_reduce(w);
}

std::string SurfacePresentation::label() const {
  return "S(" + std::to_string(genus) + "," + std::to_string(punctures) + ")";
}

Representation::Representation(SurfacePresentation s, std::vector<ProjectiveMatrix> free_images)
    : surface_(s), free_(std::move(free_images)) {
  if (static_cast<int>(free_.size()) != surface_.free_count()) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(surface_.free_count()) +
                                                " generator images, got " + std::to_string(free_.size()));
  }
  for (const auto& m : free_) all_.push_back(m.rep());
  for (const auto& m : all_) inv_.push_back(m.inverse_unimodular());
  // c_p is the inverse of the product of the rest of the relator.
  Word rest = surface_.splitting_word(surface_.genus, surface_.punctures - 1);
  Matrix2 acc = identity_matrix();
  for (const Letter& l : rest) acc = acc * (l.exp > 0 ? all_[slot(l.gen)] : inv_[slot(l.gen)]);
  ProjectiveMatrix cp = ProjectiveMatrix::renormalize(acc).inverse();
  all_.push_back(cp.rep());
  inv_.push_back(cp.rep().inverse_unimodular());
}

int Representation::slot(const Generator& g) const {
  if (!surface_.declares(g)) throw Error(ErrorCode::UnknownGenerator, g.name() + " on " + surface_.label());
  if (g.kind == 'a') return 2 * (g.index - 1);
  if (g.kind == 'b') return 2 * (g.index - 1) + 1;
  return 2 * surface_.genus + g.index - 1;
}

ProjectiveMatrix Representation::image(const Generator& g) const {
  return ProjectiveMatrix::renormalize(all_[slot(g)]);
}

ProjectiveMatrix Representation::eval(const Word& w) const {
  Matrix2 acc = identity_matrix();
  for (const Letter& l : w) {
    int s = slot(l.gen);
    acc = acc * (l.exp > 0 ? all_[s] : inv_[s]);
  }
  return ProjectiveMatrix::from_product(acc);
}

Representation Representation::conjugated(const ProjectiveMatrix& g) const {
  std::vector<ProjectiveMatrix> out;
  ProjectiveMatrix gi = g.inverse();
  for (const auto& m : free_) out.push_back(g * m * gi);
  Representation r(surface_, out);
  r.seed = seed;
  r.origin = origin;
  return r;
}

Representation Representation::flipped() const {
  std::vector<ProjectiveMatrix> out;
  for (const auto& m : free_) out.push_back(m.flipped());
  Representation r(surface_, out);
  r.seed = seed;
  r.origin = origin;
  return r;
}

Representation Representation::with_images(
    const std::vector<std::pair<Generator, ProjectiveMatrix>>& changes) const {
  std::vector<ProjectiveMatrix> out = free_;
  for (const auto& [g, m] : changes) {
    if (!surface_.is_free(g)) throw Error(ErrorCode::UnknownGenerator, g.name() + " is not a free generator");
    out[static_cast<std::size_t>(slot(g))] = m;
  }
  Representation r(surface_, out);
  r.seed = seed;
  r.origin = origin;
  return r;
}

namespace {

bool hp_type(PslType t) { return t == PslType::Hyperbolic || is_parabolic(t); }

void require_hp(const Representation& rep) {
  for (int i = 1; i <= rep.surface().punctures; ++i) {
    PslType t = classify_psl(rep.peripheral(i));
    if (!hp_type(t)) throw Error(ErrorCode::NotHP, "c" + std::to_string(i) + " is " + to_string(t));
  }
}

}  // namespace

bool is_hp(const Representation& rep) {
  for (int i = 1; i <= rep.surface().punctures; ++i) {
    if (!hp_type(classify_psl(rep.peripheral(i)))) return false;
  }
  return true;
}

bool is_type_preserving(const Representation& rep) {
  for (int i = 1; i <= rep.surface().punctures; ++i) {
    if (!is_parabolic(classify_psl(rep.peripheral(i)))) return false;
  }
  return true;
}

int euler_class(const Representation& rep) {
  require_hp(rep);
  const auto& s = rep.surface();
  CoverElement acc = cover_identity();
  for (int j = 1; j <= s.genus; ++j) {
    CoverElement a{rep.image({'a', j}), 0}, b{rep.image({'b', j}), 0};
    acc = cover_mul(acc, cover_commutator(a, b));
  }
  for (int i = 1; i <= s.punctures; ++i) {
    acc = cover_mul(acc, special_lift(rep.peripheral(i), LiftMode::ClosureHyp0));
  }
  // Rounding in the relator product grows with the size of the entries.
  double scale = 1;
  for (const auto& m : rep.free_images()) scale = std::max(scale, m.rep().max_abs());
  scale = std::max(scale, rep.peripheral(s.punctures).rep().max_abs());
  if (!is_identity(acc.base, 1e-8 * scale * scale)) {
    throw Error(ErrorCode::RelatorNotCentral,
                "relator deviates from identity by " + std::to_string(projective_distance(acc.base, identity_matrix())));
  }
  return static_cast<int>(cover_classify(acc).n);
}

SignVector sign_vector(const Representation& rep) {
  require_hp(rep);
  SignVector out;
  for (int i = 1; i <= rep.surface().punctures; ++i) {
    switch (classify_psl(rep.peripheral(i))) {
      case PslType::ParabolicPlus: out.push_back(1); break;
      case PslType::ParabolicMinus: out.push_back(-1); break;
      default: out.push_back(0); break;
    }
  }
  return out;
}

std::string format_signs(const SignVector& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i] > 0 ? "+" : (s[i] < 0 ? "-" : "0");
  }
  return out;
}

SignVector parse_signs(const std::string& text) {
  SignVector out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
    if (tok == "+" || tok == "+1" || tok == "1") {
      out.push_back(1);
    } else if (tok == "-" || tok == "-1") {
      out.push_back(-1);
    } else if (tok == "0") {
      out.push_back(0);
    } else {
      throw Error(ErrorCode::ParseError, "bad sign entry '" + tok + "'");
    }
  }
  return out;
}

std::string to_string(MwVerdict v) {
  switch (v) {
    case MwVerdict::FeasibleIff: return "FeasibleIff";
    case MwVerdict::FeasibleSufficient: return "FeasibleSufficient";
    case MwVerdict::Infeasible: return "Infeasible";
    case MwVerdict::Unknown: return "Unknown";
  }
  return "?";
}

MwVerdict mw_bounds(int genus, int punctures, int n, const SignVector& s) {
  if (static_cast<int>(s.size()) != punctures) {
    throw Error(ErrorCode::InvalidArgument, "sign vector length differs from puncture count");
  }
  int chi = 2 - 2 * genus - punctures;
  int pp = 0, pm = 0, p0 = 0;
  for (int x : s) (x > 0 ? pp : (x < 0 ? pm : p0))++;
  bool inside = chi + pp <= n && n <= -chi - pm;
  if (p0 >= 1) return inside ? MwVerdict::FeasibleIff : MwVerdict::Infeasible;
  return inside ? MwVerdict::FeasibleSufficient : MwVerdict::Unknown;
}

CoverElement evaluation_map(const Representation& rep) {
  const auto& s = rep.surface();
  CoverElement acc = cover_identity();
  for (int j = 1; j <= s.genus; ++j) {
    acc = cover_mul(acc, cover_commutator({rep.image({'a', j}), 0}, {rep.image({'b', j}), 0}));
  }
  for (int i = 1; i < s.punctures; ++i) {
    acc = cover_mul(acc, special_lift(rep.peripheral(i), LiftMode::Eval));
  }
  return acc;
}

bool is_standard_split(const SurfacePresentation& s, const SplittingSpec& split) {
  if (split.j < 0 || split.j > s.genus || split.k < 0 || split.k > s.punctures) return false;
  if (split.j != s.genus && split.k != 0) return false;
  int left_chi = 2 - 2 * split.j - (split.k + 1);
  int right_chi = 2 - 2 * (s.genus - split.j) - (s.punctures - split.k + 1);
  return left_chi < 0 && right_chi < 0;
}

Representation rotate_punctures(const Representation& rep) {
  const auto& s = rep.surface();
  ProjectiveMatrix last = rep.peripheral(s.punctures), last_inv = last.inverse();
  std::vector<ProjectiveMatrix> imgs;
  for (int j = 1; j <= s.genus; ++j) {
    imgs.push_back(last * rep.image({'a', j}) * last_inv);
    imgs.push_back(last * rep.image({'b', j}) * last_inv);
  }
  imgs.push_back(last);
  for (int k = 1; k + 1 < s.punctures; ++k) imgs.push_back(rep.peripheral(k));
  return Representation(s, imgs);
}

std::pair<Representation, Representation> restrict_rep(const Representation& rep, const SplittingSpec& split) {
  const auto& s = rep.surface();
  if (!is_standard_split(s, split)) {
    throw Error(ErrorCode::InvalidSplit, "gamma_{" + std::to_string(split.j) + "," + std::to_string(split.k) +
                                             "} is not a standard splitting curve of " + s.label());
  }
  ProjectiveMatrix boundary = rep.eval(s.splitting_word(split.j, split.k));
  PslType t = classify_psl(boundary);
  if (t == PslType::Elliptic || t == PslType::Identity) {
    throw Error(ErrorCode::BoundaryElliptic, "splitting curve has " + to_string(t) + " image");
  }
  std::vector<ProjectiveMatrix> left, right;
  for (int h = 1; h <= split.j; ++h) {
    left.push_back(rep.image({'a', h}));
    left.push_back(rep.image({'b', h}));
  }
  for (int i = 1; i <= split.k; ++i) left.push_back(rep.image({'c', i}));
  for (int h = split.j + 1; h <= s.genus; ++h) {
    right.push_back(rep.image({'a', h}));
    right.push_back(rep.image({'b', h}));
  }
  for (int i = split.k + 1; i <= s.punctures; ++i) right.push_back(rep.image({'c', i}));
  return {Representation(SurfacePresentation(split.j, split.k + 1), left),
          Representation(SurfacePresentation(s.genus - split.j, s.punctures - split.k + 1), right)};
}

}  // namespace thyp
