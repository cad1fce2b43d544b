#include "thyp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "thyp/audit.hpp"
#include "thyp/constructors.hpp"
#include "thyp/errors.hpp"
#include "thyp/io.hpp"
#include "thyp/selftest.hpp"

namespace thyp {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
};

std::vector<double> parse_numbers(const std::string& text, std::size_t count, const std::string& what) {
  std::vector<double> v;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, what + ": '" + tok + "' is not a number");
    }
  }
  if (v.size() != count) throw Error(ErrorCode::ParseError, what + " needs " + std::to_string(count) + " numbers");
  return v;
}

ProjectiveMatrix parse_matrix(const std::string& text) {
  auto v = parse_numbers(text, 4, "--matrix");
  return ProjectiveMatrix::from_matrix({v[0], v[1], v[2], v[3]});
}

void emit(const Context& ctx, const std::string& path, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    ctx.out << text;
  } else {
    write_file_atomic(path, text);
  }
}

Json surface_json(const SurfacePresentation& s) { return {{"genus", s.genus}, {"punctures", s.punctures}}; }

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  int genus = 0;
  int punctures = 3;
  int euler = 0;
  std::string signs;
  std::string boundary;
  std::uint64_t seed = 0;
  std::string output;
};

int do_construct(const Context& ctx, const ConstructArgs& a) {
  Representation rep = [&] {
    if (!a.boundary.empty()) {
      Rng rng(a.seed);
      Representation r = build_boundary_extremal(a.genus, a.punctures, parse_matrix(a.boundary), rng);
      r.seed = a.seed;
      return r;
    }
    return build_rep({a.genus, a.punctures, a.euler, parse_signs(a.signs), a.seed});
  }();
  emit(ctx, a.output, rep_to_json(rep));
  return 0;
}

// ---------------------------------------------------------------- classify

Json classify_json(const CoverElement& x) {
  Json j = cover_element_to_json(x);
  j["psl_type"] = to_string(classify_psl(x.base));
  j["trace"] = x.base.trace();
  DeltaRange r = delta_range(x);
  j["delta_range"] = Json::array({r.lo(), r.hi()});
  j["class"] = cover_class_to_json(cover_classify(x));
  Matrix2 sl = sl_projection(x);
  j["sl_projection"] = Json::array({sl.a11, sl.a12, sl.a21, sl.a22});
  return j;
}

struct ClassifyArgs {
  std::string input;
  std::string matrix;
  std::int64_t index = 0;
  std::string output;
};

int do_classify(const Context& ctx, const ClassifyArgs& a) {
  if (a.input.empty() == a.matrix.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give either an input file or --matrix");
  }
  if (!a.matrix.empty()) {
    emit(ctx, a.output, classify_json({parse_matrix(a.matrix), a.index}));
    return 0;
  }
  Json in = read_json_file(a.input);
  if (in.is_array()) {
    Json all = Json::array();
    for (const auto& e : in) all.push_back(classify_json(cover_element_from_json(e)));
    emit(ctx, a.output, all);
  } else {
    emit(ctx, a.output, classify_json(cover_element_from_json(in)));
  }
  return 0;
}

// ---------------------------------------------------------------- euler

struct EulerArgs {
  std::string input;
  bool restrictions = false;
  std::string output;
};

int do_euler(const Context& ctx, const EulerArgs& a) {
  Representation rep = rep_from_json(read_json_file(a.input));
  const auto& s = rep.surface();
  int e = euler_class(rep);
  SignVector sv = sign_vector(rep);
  int chi = s.euler_characteristic();
  Json j;
  j["surface"] = surface_json(s);
  j["euler"] = e;
  j["signs"] = sv;
  j["type_preserving"] = is_type_preserving(rep);
  j["extremal"] = e == -chi || e == chi;
  j["milnor_wood"] = {{"lower", chi}, {"upper", -chi}, {"verdict", to_string(mw_bounds(s.genus, s.punctures, e, sv))}};
  if (a.restrictions) j["restrictions"] = restrictions_to_json(check_restrictions(rep));
  emit(ctx, a.output, j);
  return 0;
}

// ---------------------------------------------------------------- audit

struct AuditArgs {
  std::vector<std::string> inputs;
  AuditOptions opts;
  std::string report;
  std::string csv;
};

int do_audit(const Context& ctx, const AuditArgs& a) {
  Json reports = Json::array();
  std::string csv = audit_csv_header() + "\n";
  bool clean = true;
  for (const auto& path : a.inputs) {
    AuditReport r = audit_rep(rep_from_json(read_json_file(path)), a.opts);
    clean = clean && r.passed();
    Json j = audit_to_json(r);
    j["input"] = path;
    reports.push_back(j);
    csv += audit_csv_row(path, r) + "\n";
    if (!r.passed()) {
      ctx.err << path << ": " << r.violations.size() << " violation(s), min |trace| - 2 = " << std::setprecision(17)
              << r.min_trace_margin << " on " << to_string(r.min_margin_curve) << "\n";
    }
  }
  emit(ctx, a.report, a.inputs.size() == 1 ? reports[0] : reports);
  if (!a.csv.empty()) write_file_atomic(a.csv, csv);
  return clean ? 0 : 1;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  ConstructArgs build;
  int count = 10;
  AuditOptions opts;
  std::string out_dir;
};

int do_sample(const Context& ctx, const SampleArgs& a) {
  BuildRequest req{a.build.genus, a.build.punctures, a.build.euler, parse_signs(a.build.signs), a.build.seed};
  check_feasible(req);
  if (a.count < 0) throw Error(ErrorCode::InvalidArgument, "count must be non-negative");

  struct Slot {
    std::optional<Representation> rep;
    AuditReport report;
    std::string error;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(a.count));
  AuditOptions per = a.opts;
  per.jobs = 1;
  auto work = [&](std::size_t i) {
    BuildRequest r = req;
    r.seed = derive_seed(req.seed, i);
    try {
      slots[i].rep = build_rep(r);
      slots[i].report = audit_rep(*slots[i].rep, per);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SelfVerificationFailed) throw;
      slots[i].error = e.what();
    }
  };
  int jobs = std::max(1, std::min(a.opts.jobs, a.count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < slots.size(); ++i) work(i);
  } else {
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    std::mutex m;
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        try {
          for (std::size_t i = j; i < slots.size(); i += jobs) work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(m);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
  }

  if (!a.out_dir.empty()) std::filesystem::create_directories(a.out_dir);
  Json samples = Json::array();
  int built = 0, np = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    Json j;
    j["index"] = i;
    j["seed"] = derive_seed(req.seed, i);
    if (!s.rep) {
      j["error"] = s.error;
      samples.push_back(j);
      continue;
    }
    ++built;
    np += s.report.passed() ? 1 : 0;
    j["curves_checked"] = s.report.curves_checked;
    j["depth"] = s.report.depth;
    j["min_trace_margin"] = std::isfinite(s.report.min_trace_margin) ? Json(s.report.min_trace_margin) : Json();
    j["violations"] = s.report.violations.size();
    j["np_pass"] = s.report.passed();
    if (!a.out_dir.empty()) {
      std::ostringstream name;
      name << "rep_" << std::setw(4) << std::setfill('0') << i << ".json";
      std::string path = (std::filesystem::path(a.out_dir) / name.str()).string();
      write_file_atomic(path, rep_to_json(*s.rep).dump(2) + "\n");
      j["file"] = name.str();
    }
    samples.push_back(j);
  }
  Json summary;
  summary["request"] = {{"genus", req.genus},
                        {"punctures", req.punctures},
                        {"euler", req.euler},
                        {"signs", req.signs},
                        {"seed", req.seed}};
  summary["count"] = a.count;
  summary["built"] = built;
  summary["depth"] = a.opts.depth;
  summary["margin"] = a.opts.margin;
  summary["np_pass"] = np;
  summary["np_fraction"] = built > 0 ? Json(static_cast<double>(np) / built) : Json();
  summary["samples"] = samples;
  emit(ctx, a.build.output, summary);
  ctx.err << "NP-pass at depth " << a.opts.depth << ": " << np << " / " << built << "\n";
  return 0;
}

// ---------------------------------------------------------------- selftest

struct SelftestArgs {
  SelftestOptions opts;
  std::vector<std::string> suites;
  std::string output;
};

int do_selftest(const Context& ctx, const SelftestArgs& a) {
  std::vector<CheckResult> results;
  if (a.suites.empty()) {
    results = run_selftest(a.opts);
  } else {
    for (const auto& name : a.suites) {
      std::optional<Suite> chosen;
      for (Suite s : {Suite::CoverLaws, Suite::ImageTheorems, Suite::SignRules, Suite::Euler}) {
        if (to_string(s) == name) chosen = s;
      }
      if (!chosen) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
      auto part = run_suite(*chosen, a.opts);
      results.insert(results.end(), part.begin(), part.end());
    }
  }
  bool ok = true;
  Json checks = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    ctx.err << (r.passed() ? "PASS " : "FAIL ") << r.suite << " / " << r.name << ": " << r.failures << " of "
            << r.trials << " failed";
    if (!r.first_failure.empty()) ctx.err << " (first: " << r.first_failure << ")";
    ctx.err << "\n";
    Json j;
    j["suite"] = r.suite;
    j["name"] = r.name;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["passed"] = r.passed();
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    checks.push_back(j);
  }
  Json j;
  j["seed"] = a.opts.seed;
  j["scale"] = a.opts.scale;
  j["passed"] = ok;
  j["checks"] = checks;
  if (!a.output.empty()) emit(ctx, a.output, j);
  return ok ? 0 : 1;
}

void add_build_flags(CLI::App* cmd, ConstructArgs& a, bool signs_required) {
  cmd->add_option("--genus", a.genus, "genus g")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--punctures", a.punctures, "number of punctures p")->required()->check(CLI::PositiveNumber);
  auto* e = cmd->add_option("--euler", a.euler, "relative Euler class");
  auto* s = cmd->add_option("--signs", a.signs, "comma-separated +/- per puncture");
  if (signs_required) {
    e->required();
    s->required();
  }
  cmd->add_option("--seed", a.seed, "RNG seed");
  cmd->add_option("-o,--output", a.output, "output file (stdout when omitted)");
}

void add_audit_flags(CLI::App* cmd, AuditOptions& o) {
  cmd->add_option("--depth", o.depth, "orbit depth")->check(CLI::NonNegativeNumber);
  cmd->add_option("--margin", o.margin, "violation margin on |trace| - 2")->check(CLI::NonNegativeNumber);
  cmd->add_option("--min-curves", o.min_curves, "raise the depth until this many curves are enumerated");
  cmd->add_option("--max-depth", o.max_depth, "upper limit for --min-curves")->check(CLI::NonNegativeNumber);
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Relative Euler classes and total hyperbolicity of punctured-surface representations", "thyp"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "build a type-preserving representation");
  add_build_flags(c_construct, construct, false);
  auto* boundary =
      c_construct->add_option("--boundary", construct.boundary, "a,b,c,d: extremal build with this hyperbolic c_p");
  boundary->excludes(c_construct->get_option("--euler"))->excludes(c_construct->get_option("--signs"));

  ClassifyArgs classify;
  auto* c_classify = app.add_subcommand("classify", "classify cover elements");
  c_classify->add_option("input", classify.input, "JSON cover element or array of them");
  c_classify->add_option("--matrix", classify.matrix, "a,b,c,d");
  c_classify->add_option("--index", classify.index, "deck index of the lift");
  c_classify->add_option("-o,--output", classify.output, "output file");

  EulerArgs euler;
  auto* c_euler = app.add_subcommand("euler", "relative Euler class and signs of a representation");
  c_euler->add_option("input", euler.input, "representation JSON")->required();
  c_euler->add_flag("--restrictions", euler.restrictions, "cut off the distinguished pants and report each piece");
  c_euler->add_option("-o,--output", euler.output, "output file");

  AuditArgs audit;
  auto* c_audit = app.add_subcommand("audit", "audit simple closed curves for non-hyperbolic images");
  c_audit->add_option("inputs", audit.inputs, "representation JSON files")->required();
  add_audit_flags(c_audit, audit.opts);
  c_audit->add_option("--report", audit.report, "JSON report (stdout when omitted)");
  c_audit->add_option("--csv", audit.csv, "CSV summary, one row per input");

  SampleArgs sample;
  auto* c_sample = app.add_subcommand("sample", "seeded batch of builds with an NP audit");
  add_build_flags(c_sample, sample.build, true);
  c_sample->add_option("--count", sample.count, "number of samples")->check(CLI::NonNegativeNumber);
  add_audit_flags(c_sample, sample.opts);
  c_sample->add_option("--out-dir", sample.out_dir, "write each representation here");

  SelftestArgs selftest;
  auto* c_selftest = app.add_subcommand("selftest", "run the property suites");
  c_selftest->add_option("--seed", selftest.opts.seed, "base seed");
  c_selftest->add_option("--scale", selftest.opts.scale, "multiplier on trial counts")->check(CLI::PositiveNumber);
  c_selftest->add_option("--suite", selftest.suites, "cover-laws, image-theorems, sign-rules or euler");
  c_selftest->add_option("-o,--output", selftest.output, "JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_construct) {
      if (construct.boundary.empty() && (c_construct->count("--euler") == 0 || c_construct->count("--signs") == 0)) {
        throw Error(ErrorCode::InvalidArgument, "construct needs --euler and --signs, or --boundary");
      }
      return do_construct(ctx, construct);
    }
    if (*c_classify) return do_classify(ctx, classify);
    if (*c_euler) return do_euler(ctx, euler);
    if (*c_audit) return do_audit(ctx, audit);
    if (*c_sample) return do_sample(ctx, sample);
    if (*c_selftest) return do_selftest(ctx, selftest);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SelfVerificationFailed) {
      err << "internal error: " << e.what() << "\n";
      err.flush();
      std::abort();
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace thyp
