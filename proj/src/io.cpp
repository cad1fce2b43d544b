#include "thyp/io.hpp"

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "thyp/errors.hpp"

namespace thyp {

namespace {

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

CoverTag parse_tag(const std::string& s) {
  if (s == "Hyp") return CoverTag::Hyp;
  if (s == "ParPlus") return CoverTag::ParPlus;
  if (s == "ParMinus") return CoverTag::ParMinus;
  if (s == "Ell") return CoverTag::Ell;
  if (s == "Center") return CoverTag::Center;
  throw Error(ErrorCode::ParseError, "unknown cover tag '" + s + "'");
}

std::string tag_name(CoverTag t) {
  switch (t) {
    case CoverTag::Hyp: return "Hyp";
    case CoverTag::ParPlus: return "ParPlus";
    case CoverTag::ParMinus: return "ParMinus";
    case CoverTag::Ell: return "Ell";
    case CoverTag::Center: return "Center";
  }
  return "?";
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

Json matrix_to_json(const ProjectiveMatrix& m) {
  const Matrix2& r = m.rep();
  return Json::array({r.a11, r.a12, r.a21, r.a22});
}

ProjectiveMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::ParseError, "matrix must be an array of 4 numbers");
  for (const auto& x : j) {
    if (!x.is_number()) throw Error(ErrorCode::ParseError, "matrix entries must be numbers");
  }
  return ProjectiveMatrix::from_matrix({j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()});
}

Json cover_element_to_json(const CoverElement& x) {
  Json j;
  j["matrix"] = matrix_to_json(x.base);
  j["index"] = x.lift_index;
  return j;
}

CoverElement cover_element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw Error(ErrorCode::ParseError, "missing field 'matrix'");
  return {matrix_from_json(j.at("matrix")), field<std::int64_t>(j, "index")};
}

Json cover_class_to_json(const CoverClass& c) {
  Json j;
  j["tag"] = tag_name(c.tag);
  j["n"] = c.n;
  return j;
}

CoverClass cover_class_from_json(const Json& j) {
  CoverClass c{parse_tag(field<std::string>(j, "tag")), field<int>(j, "n")};
  if (c.tag == CoverTag::Ell && c.n == 0) throw Error(ErrorCode::ParseError, "Ell(0) is not a class");
  return c;
}

Json rep_to_json(const Representation& rep) {
  const auto& s = rep.surface();
  Json j;
  j["surface"] = {{"genus", s.genus}, {"punctures", s.punctures}};
  Json images = Json::object();
  for (const auto& g : s.free_generators()) images[g.name()] = matrix_to_json(rep.image(g));
  images[Generator{'c', s.punctures}.name()] = matrix_to_json(rep.peripheral(s.punctures));
  j["images"] = images;
  Json meta = Json::object();
  if (rep.seed) meta["seed"] = *rep.seed;
  if (!rep.origin.empty()) meta["origin"] = rep.origin;
  if (is_hp(rep)) {
    try {
      meta["euler"] = euler_class(rep);
      meta["signs"] = sign_vector(rep);
    } catch (const Error&) {
      // Left out when the relator is too far from central to name a class.
    }
  }
  j["meta"] = meta;
  return j;
}

Representation rep_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("surface") || !j.contains("images")) {
    throw Error(ErrorCode::ParseError, "representation needs 'surface' and 'images'");
  }
  SurfacePresentation s(field<int>(j.at("surface"), "genus"), field<int>(j.at("surface"), "punctures"));
  const Json& images = j.at("images");
  if (!images.is_object()) throw Error(ErrorCode::ParseError, "'images' must be an object");
  std::set<std::string> known;
  std::vector<ProjectiveMatrix> free;
  for (const auto& g : s.free_generators()) {
    known.insert(g.name());
    if (!images.contains(g.name())) throw Error(ErrorCode::ParseError, "missing image of " + g.name());
    free.push_back(matrix_from_json(images.at(g.name())));
  }
  std::string last = Generator{'c', s.punctures}.name();
  known.insert(last);
  for (const auto& [key, value] : images.items()) {
    if (!known.count(key)) throw Error(ErrorCode::UnknownGenerator, "'" + key + "' is not a generator of " + s.label());
  }
  Representation rep(s, free);
  if (images.contains(last)) {
    ProjectiveMatrix given = matrix_from_json(images.at(last));
    double dist = projective_distance(given, rep.peripheral(s.punctures));
    if (dist > 1e-8) {
      std::ostringstream msg;
      msg << "stored " << last << " differs from the relator's value by " << dist;
      throw Error(ErrorCode::RelatorViolated, msg.str());
    }
  }
  if (j.contains("meta") && j.at("meta").is_object()) {
    const Json& meta = j.at("meta");
    if (meta.contains("seed") && meta.at("seed").is_number_unsigned()) rep.seed = meta.at("seed").get<std::uint64_t>();
    if (meta.contains("origin") && meta.at("origin").is_string()) rep.origin = meta.at("origin").get<std::string>();
  }
  return rep;
}

Json audit_to_json(const AuditReport& r) {
  Json j;
  j["surface"] = {{"genus", r.genus}, {"punctures", r.punctures}};
  j["euler"] = r.euler;
  j["signs"] = r.signs;
  j["requested_depth"] = r.requested_depth;
  j["depth"] = r.depth;
  j["margin"] = r.margin;
  j["curves_checked"] = r.curves_checked;
  j["dropped"] = r.dropped;
  j["unresolved"] = r.unresolved;
  j["min_trace_margin"] = finite_or_null(r.min_trace_margin);
  j["min_margin_curve"] = to_string(r.min_margin_curve);
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    vs.push_back({{"curve", to_string(v.curve)},
                  {"kind", to_string(v.kind)},
                  {"type", to_string(v.type)},
                  {"trace", finite_or_null(v.trace)}});
  }
  j["violations"] = vs;
  j["passed"] = r.passed();
  return j;
}

std::string audit_csv_header() {
  return "name,genus,punctures,euler,signs,depth,curves,min_trace_margin,violations,unresolved";
}

std::string audit_csv_row(const std::string& name, const AuditReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << name << ',' << r.genus << ',' << r.punctures << ',' << r.euler << ",\"" << format_signs(r.signs) << "\","
      << r.depth << ',' << r.curves_checked << ',' << r.min_trace_margin << ',' << r.violations.size() << ','
      << r.unresolved;
  return out.str();
}

Json restrictions_to_json(const RestrictionReport& r) {
  Json j;
  j["euler"] = r.euler;
  j["signs"] = r.signs;
  j["distinguished_puncture"] = r.distinguished;
  Json pieces = Json::array();
  for (const auto& p : r.pieces) {
    pieces.push_back({{"role", p.role},
                      {"genus", p.genus},
                      {"punctures", p.punctures},
                      {"euler", p.euler},
                      {"extremal", p.extremal()}});
  }
  j["pieces"] = pieces;
  j["additive"] = r.additive;
  j["pants_zero"] = r.pants_zero;
  j["complement_extremal"] = r.complement_extremal;
  j["all_extremal"] = r.all_extremal;
  j["counterexample_pattern"] = r.counterexample_pattern();
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw Error(ErrorCode::InvalidArgument, "short write to '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorCode::InvalidArgument, "cannot rename onto '" + path + "': " + ec.message());
  }
}

}  // namespace thyp
