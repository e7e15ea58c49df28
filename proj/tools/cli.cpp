#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "tsallis/instance_gen.hpp"
#include "tsallis/report.hpp"
#include "tsallis/serialization.hpp"
#include "tsallis/version.hpp"

namespace tsallis::cli {
namespace {

using Json = nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

std::string full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json matrix_json(const Matrix& m) { return Json::parse(matrix_to_json(m)); }

// ---- verify / replay ----

struct VerifyOptions {
  RunConfig config;
  std::string format = "text";
  std::string cases_dir;
  std::string replay;
};

void persist_failures(const SuiteReport& report, const std::string& dir) {
  const auto save = [&](const CellRecord& c) {
    for (std::size_t k = 0; k < c.failing_cases.size(); ++k) {
      std::ostringstream name;
      name << c.suite << "_d" << c.dim << "_v";
      if (c.v)
        name << *c.v;
      else
        name << "none";
      name << "_i" << c.failing_indices[k] << ".json";
      write_file((std::filesystem::path(dir) / name.str()).string(),
                 c.failing_cases[k] + "\n");
    }
  };
  for (const auto& c : report.cells) save(c);
  for (const auto& c : report.findings) save(c);
}

int replay_case(const std::string& path, const std::string& format,
                std::ostream& out) {
  const InequalityCase c = case_from_json(read_file(path));
  const Verdict v = check_case(c);
  if (format == "json") {
    out << verdict_to_json(v) << "\n";
  } else {
    out << to_string(v.id) << " dim=" << v.dim << " seed=" << v.seed
        << " index=" << v.index;
    if (v.v) out << " v=" << full(*v.v);
    out << "\n";
    for (const LinkVerdict& l : v.links)
      out << "  " << l.lower << " <= " << l.upper << ": margin=" << full(l.verdict.margin)
          << " scale=" << full(l.verdict.scale) << " "
          << (l.verdict.holds ? "holds" : "FAILS") << "\n";
    if (v.quadrature_delta)
      out << "  quadrature delta=" << full(*v.quadrature_delta) << " "
          << (v.quadrature_stable ? "stable" : "UNSTABLE") << "\n";
    out << (v.overall_holds ? "HOLDS" : "FAILS") << "\n";
  }
  return v.overall_holds ? 0 : 1;
}

int run_verify(VerifyOptions& o, std::ostream& out) {
  if (!o.replay.empty()) return replay_case(o.replay, o.format, out);
  o.config.format = report_format_from_string(o.format);
  const SuiteReport report = run_suite(o.config);
  const std::string text = serialize_report(report, o.config.format);
  std::string cases_dir = o.cases_dir;
  if (cases_dir.empty() && !o.config.out.empty()) cases_dir = o.config.out + ".cases";
  if (o.config.out.empty()) {
    out << text;
  } else {
    write_file(o.config.out, text);
    const ReportSummary& s = report.summary;
    out << "wrote " << o.config.out << ": " << s.cells << " cells, "
        << s.asserted_failures << " asserted failures, " << s.finding_failures
        << " finding failures\n";
  }
  if (!cases_dir.empty()) persist_failures(report, cases_dir);
  return exit_code(report);
}

// ---- eval ----

struct EvalOptions {
  std::string fn;
  std::optional<double> x, v, s, t, m, big_m, p;
  std::string a_path, b_path;
  std::string format = "text";
};

double need(const std::optional<double>& x, const EvalOptions& o, const char* flag) {
  if (!x) throw ConfigError("eval --fn " + o.fn + " needs " + flag);
  return *x;
}

SpectralWindow need_window(const EvalOptions& o) {
  return SpectralWindow(need(o.m, o, "--m"), need(o.big_m, o, "--M"));
}

using Values = std::vector<std::pair<std::string, double>>;

const std::map<std::string, std::function<Values(const EvalOptions&)>>& scalar_table() {
  static const std::map<std::string, std::function<Values(const EvalOptions&)>> t{
      {"ln_v", [](const auto& o) { return Values{{"value", ln_v(need(o.x, o, "--x"), need(o.v, o, "--v"))}}; }},
      {"exp_v", [](const auto& o) { return Values{{"value", exp_v(need(o.x, o, "--x"), need(o.v, o, "--v"))}}; }},
      {"xi", [](const auto& o) { return Values{{"value", xi(need(o.t, o, "--t"), need_window(o))}}; }},
      {"psi", [](const auto& o) { return Values{{"value", psi(need(o.t, o, "--t"), need_window(o))}}; }},
      {"m_v", [](const auto& o) { return Values{{"value", young_lower_factor(need(o.x, o, "--x"), need(o.v, o, "--v"))}}; }},
      {"M_v", [](const auto& o) { return Values{{"value", young_upper_factor(need(o.x, o, "--x"), need(o.v, o, "--v"))}}; }},
      {"kantorovich", [](const auto& o) { return Values{{"value", kantorovich(need(o.x, o, "--x"))}}; }},
      {"generalized_kantorovich", [](const auto& o) {
         return Values{{"value", generalized_kantorovich(need_window(o), need(o.v, o, "--v"))}};
       }},
      {"g_remark", [](const auto& o) { return Values{{"value", g_remark(need(o.v, o, "--v"), need(o.x, o, "--x"))}}; }},
      {"g_remark_argmin", [](const auto& o) {
         const double v = need(o.v, o, "--v");
         return Values{{"argmin", g_remark_argmin(v)}, {"min", g_remark_min(v)}};
       }},
      {"hermite_f", [](const auto& o) { return Values{{"value", hermite_f(need(o.t, o, "--t"), need(o.v, o, "--v"))}}; }},
      {"tangent_gap", [](const auto& o) {
         return Values{{"value", tangent_gap(need(o.s, o, "--s"), need(o.t, o, "--t"), need(o.v, o, "--v"))}};
       }},
      {"compare_fv", [](const auto& o) {
         const ComparisonValues c = compare_fv(need(o.s, o, "--s"), need(o.t, o, "--t"), need(o.v, o, "--v"));
         return Values{{"g", c.g}, {"h", c.h}, {"f", c.f}};
       }},
      {"ln_v_chord", [](const auto& o) {
         return Values{{"value", ln_v_chord(need(o.t, o, "--t"), need_window(o), need(o.v, o, "--v"))}};
       }},
  };
  return t;
}

SpdMatrix load(const std::string& path, const EvalOptions& o, const char* flag) {
  if (path.empty()) throw ConfigError("eval --fn " + o.fn + " needs " + flag);
  return spd_from_json(read_file(path));
}

Matrix eval_matrix(const EvalOptions& o) {
  const auto pair = [&] {
    return OperatorPair(load(o.a_path, o, "--A"), load(o.b_path, o, "--B"));
  };
  if (o.fn == "tsallis") return tsallis_entropy(pair(), need(o.v, o, "--v"));
  if (o.fn == "relative") return relative_entropy(pair());
  if (o.fn == "natural_mean") return natural_mean(pair(), need(o.v, o, "--v")).matrix();
  if (o.fn == "exp_entropy") return exp_entropy(pair(), need(o.v, o, "--v")).matrix();
  if (o.fn == "exp_entropy_limit") return exp_entropy_limit(pair()).matrix();
  if (o.fn == "power") return matrix_power(load(o.a_path, o, "--A"), need(o.p, o, "--p")).matrix();
  if (o.fn == "identity") return load(o.a_path, o, "--A").matrix();
  throw ConfigError("unknown function: " + o.fn);
}

int run_eval(const EvalOptions& o, std::ostream& out) {
  const auto& table = scalar_table();
  if (const auto it = table.find(o.fn); it != table.end()) {
    const Values values = it->second(o);
    if (o.format == "json") {
      Json j{{"fn", o.fn}};
      for (const auto& [k, x] : values) j[k] = x;
      out << j.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (values.size() > 1) out << values[i].first << "=";
        out << full(values[i].second) << (i + 1 < values.size() ? " " : "\n");
      }
    }
    return 0;
  }
  const Matrix m = eval_matrix(o);
  const Vector eig = symmetric_eigen(m).eigenvalues;
  if (o.format == "json") {
    Json j{{"fn", o.fn}, {"matrix", matrix_json(m)},
           {"eigenvalues", std::vector<double>(eig.begin(), eig.end())}};
    out << j.dump() << "\n";
  } else {
    for (Index i = 0; i < m.rows(); ++i) {
      for (Index k = 0; k < m.cols(); ++k) out << (k ? " " : "") << full(m(i, k));
      out << "\n";
    }
    out << "eigenvalues:";
    for (double e : eig) out << " " << full(e);
    out << "\n";
  }
  return 0;
}

// ---- gen ----

struct GenOptions {
  GenSpec spec;
  std::string constraint = "none";
  std::vector<double> window;
  std::string case_id;
  std::optional<double> v;
  int quad_nodes = 32;
  double tol = kDefaultTol;
  std::string out;
};

Constraint constraint_from_string(const std::string& s) {
  for (Constraint c : {Constraint::kNone, Constraint::kCertifiedWindow,
                       Constraint::kExpDomain, Constraint::kRatioK})
    if (to_string(c) == s) return c;
  throw ConfigError("unknown constraint: " + s);
}

int run_gen(GenOptions& o, std::ostream& out) {
  std::string text;
  if (!o.case_id.empty()) {
    InequalityId id;
    try {
      id = inequality_from_string(o.case_id);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const CaseRequest req{.id = id,
                          .dim = o.spec.dim,
                          .v = o.v,
                          .seed = o.spec.seed,
                          .index = o.spec.index,
                          .quad_nodes = o.quad_nodes,
                          .tol = o.tol};
    text = case_to_json(generate_case(req));
  } else {
    o.spec.constraint = constraint_from_string(o.constraint);
    if (!o.window.empty()) {
      if (o.window.size() != 2) throw ConfigError("--window takes m,M");
      o.spec.window = SpectralWindow(o.window[0], o.window[1]);
    }
    if (o.v) o.spec.v = *o.v;
    Json j;
    if (o.spec.constraint == Constraint::kRatioK) {
      const RatioKInstance r = random_ratio_k_instance(o.spec);
      j = {{"A", matrix_json(r.a.matrix())},
           {"B", matrix_json(r.b.matrix())},
           {"C", matrix_json(r.c.matrix())}};
    } else {
      const OperatorPair p = generate_pair(o.spec);
      j = {{"A", matrix_json(p.a().matrix())}, {"B", matrix_json(p.b().matrix())}};
    }
    if (o.spec.window)
      j["window"] = {{"m", o.spec.window->m()}, {"M", o.spec.window->big_m()}};
    j["constraint"] = o.constraint;
    j["seed"] = o.spec.seed;
    j["index"] = o.spec.index;
    text = j.dump(2);
  }
  if (o.out.empty())
    out << text << "\n";
  else
    write_file(o.out, text + "\n");
  return 0;
}

std::string version_string() {
  std::ostringstream os;
  os << "tsallis-verify " << kToolVersion << " (report schema "
     << kReportSchemaVersion << ", case schema 1)";
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of operator entropy inequalities",
               "tsallis-verify"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run inequality suites and report");
  verify->add_option("--suite", vo.config.suites, "Suite names or 'all'")->delimiter(',');
  verify->add_option("--dims", vo.config.dims, "Matrix dimensions")->delimiter(',');
  verify->add_option("--trials", vo.config.trials, "Cases per (suite, dim, v) cell");
  verify->add_option("--v-grid", vo.config.v_grid, "v values")->delimiter(',');
  verify->add_option("--seed", vo.config.seed, "Master seed")->envname("TSALLIS_SEED");
  verify->add_option("--tol", vo.config.tol, "Relative Loewner tolerance");
  verify->add_option("--quad-nodes", vo.config.quad_nodes, "Gauss-Legendre nodes");
  verify->add_option("--format", vo.format)->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", vo.config.out, "Report path (stdout if omitted)");
  verify->add_option("--threads", vo.config.threads, "Worker threads (0 = all cores)");
  verify->add_option("--persist", vo.config.persist_per_cell, "Failing cases kept per cell");
  verify->add_option("--cases-dir", vo.cases_dir, "Directory for failing case files");
  verify->add_option("--replay", vo.replay, "Re-check one persisted case file");

  std::string replay_path, replay_format = "text";
  auto* replay = app.add_subcommand("replay", "Re-check one persisted case file");
  replay->add_option("case", replay_path, "Case JSON")->required();
  replay->add_option("--format", replay_format)->check(CLI::IsMember({"json", "text"}));

  EvalOptions eo;
  auto* eval = app.add_subcommand("eval", "Evaluate one scalar or matrix function");
  eval->add_option("--fn", eo.fn, "Function name")->required();
  eval->add_option("--x", eo.x);
  eval->add_option("--v", eo.v);
  eval->add_option("--s", eo.s);
  eval->add_option("--t", eo.t);
  eval->add_option("--m", eo.m);
  eval->add_option("--M", eo.big_m);
  eval->add_option("--p", eo.p);
  eval->add_option("--A", eo.a_path, "Matrix JSON file");
  eval->add_option("--B", eo.b_path, "Matrix JSON file");
  eval->add_option("--format", eo.format)->check(CLI::IsMember({"json", "text"}));

  GenOptions go;
  auto* gen = app.add_subcommand("gen", "Emit random instances as matrix JSON");
  gen->add_option("--dim", go.spec.dim);
  gen->add_option("--cond-max", go.spec.cond_max);
  gen->add_option("--seed", go.spec.seed)->envname("TSALLIS_SEED");
  gen->add_option("--index", go.spec.index);
  gen->add_option("--tag", go.spec.tag);
  gen->add_option("--constraint", go.constraint)
      ->check(CLI::IsMember({"none", "certified-window", "exp-domain", "ratio-K"}));
  gen->add_option("--window", go.window, "m,M")->delimiter(',');
  gen->add_option("--v", go.v);
  gen->add_option("--perturbation", go.spec.perturbation);
  gen->add_option("--case", go.case_id, "Emit a full case for this inequality id");
  gen->add_option("--quad-nodes", go.quad_nodes);
  gen->add_option("--tol", go.tol);
  gen->add_option("--out", go.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(vo, out);
    if (*replay) return replay_case(replay_path, replay_format, out);
    if (*eval) return run_eval(eo, out);
    if (*gen) return run_gen(go, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tsallis::cli
