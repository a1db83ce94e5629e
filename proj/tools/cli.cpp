// Copyright 2026 The prbg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "prbg/decomposition.hpp"
#include "prbg/experiment.hpp"
#include "prbg/extremal.hpp"
#include "prbg/generators.hpp"
#include "prbg/io.hpp"
#include "prbg/prbg_structure.hpp"
#include "prbg/proximity.hpp"
#include "prbg/svg.hpp"

namespace prbg::cli {

namespace {

struct Global {
  std::uint64_t seed = 1;
  double tolerance = kTolerance;
  double eps = 1e-9;
  int trials = 50;
  std::string out;
  std::string format;  ///< empty selects the command's default
  int threads = 1;
  bool timing = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

class Context {
 public:
  Context(const Global& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

  const Global& global() const { return g_; }
  std::ostream& err() const { return err_; }

  /// The requested format, checked against what the command supports.
  std::string format(std::initializer_list<const char*> allowed) const {
    const std::string f = g_.format.empty() ? *allowed.begin() : g_.format;
    for (const char* a : allowed)
      if (f == a) return f;
    throw InputError("format '" + f + "' is not available for this command");
  }

  void emit(const std::string& text) const {
    if (g_.out.empty() || g_.out == "-")
      out_ << text;
    else
      write_file(g_.out, text);
  }

 private:
  const Global& g_;
  std::ostream& out_;
  std::ostream& err_;
};

/// Bipartite graph from graph JSON, matrix JSON, or an object holding "graph".
OrderedBipartiteGraph load_bipartite(const Json& j) {
  if (j.is_object() && j.contains("graph")) return load_bipartite(j["graph"]);
  if (j.is_object() && j.contains("ones")) return matrix_to_graph(matrix_from_json(j));
  return graph_from_json(j);
}

// ------------------------------------------------------------------ gen

struct GenArgs {
  std::string kind;
  int n = 0;
  double side = 1;
  double aspect = 0.25;
};

int cmd_gen(const Context& c, const GenArgs& a) {
  const std::uint64_t seed = c.global().seed;
  Points2<double> p;
  if (a.kind == "circle") p = gen_circle_points(a.n, seed);
  else if (a.kind == "unit-chain") p = gen_unit_edge_chain(a.n, seed);
  else if (a.kind == "regular") p = gen_regular(a.n, a.side);
  else if (a.kind == "ellipse") p = gen_ellipse_points(a.n, seed, a.aspect);
  else if (a.kind == "lens") p = gen_lens_points(a.n, seed);
  else p = gen_zigzag_points(a.n, seed);
  if (c.format({"json", "svg"}) == "svg")
    c.emit(render_points_svg(p));
  else
    c.emit(dump_json(points_to_json(p)));
  return kExitOk;
}

// ------------------------------------------------------------------ build

struct BuildArgs {
  std::string graph_class;
  std::string file;
  bool shuffle = false;
};

int cmd_build(const Context& c, const BuildArgs& a) {
  const Points2<double> p = points_from_json(read_json_file(a.file));
  GeometricGraph<double> g;
  if (a.graph_class == "udg") g = unit_distance_graph(p, c.global().eps);
  else if (a.graph_class == "gabriel") g = gabriel_graph(p, c.global().tolerance);
  else g = greedy_max_lgg(p, {a.shuffle, c.global().seed}, c.global().tolerance);
  if (c.format({"json", "svg"}) == "svg")
    c.emit(render_graph_svg(g));
  else
    c.emit(dump_json(to_json(g)));
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct FileArgs {
  std::string target;
  std::string file;
};

int cmd_verify(const Context& c, const FileArgs& a) {
  const Json in = read_json_file(a.file);
  Json report = {{"target", a.target}};
  bool ok = false;
  if (a.target == "lgg") {
    const GeometricGraph<double> g = geometric_graph_from_json(in);
    const auto w = is_valid_lgg(g, c.global().tolerance);
    ok = !w;
    if (c.format({"json", "svg"}) == "svg") {
      c.emit(render_graph_svg(g, w));
      return ok ? kExitOk : kExitViolation;
    }
    report["witness"] = w ? to_json(*w) : Json(nullptr);
  } else {
    c.format({"json"});
    const OrderedBipartiteGraph g = load_bipartite(in);
    const auto v = verify_path_restricted(g);
    ok = !v;
    report["witness"] = v ? to_json(*v) : Json(nullptr);
    if (a.target == "sprbg") {
      const bool strict = ok && is_strictly_path_restricted(g);
      report["prbg"] = ok;
      report["strict"] = strict;
      if (ok) report["tl_remark_violations"] = spbg_tl_remark_violations(g);
      ok = strict;
    }
  }
  report["ok"] = ok;
  c.emit(dump_json(report));
  return ok ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------ extremal

int cmd_extremal(const Context& c, int n) {
  const std::string fmt = c.format({"json", "csv", "svg"});
  const ZeroOneMatrix m = build_matrix_A(n);
  if (fmt == "svg") {
    c.emit(render_matrix_svg(m));
    return kExitOk;
  }
  const ExtremalRow row = run_extremal_sweep({n}).front();
  if (fmt == "csv") {
    std::ostringstream os;
    write_extremal_csv(os, {row});
    c.emit(os.str());
    return kExitOk;
  }
  Json grid = Json::array();
  std::istringstream lines(render_matrix_text(m, true));
  for (std::string line; std::getline(lines, line);) grid.push_back(line);
  c.emit(dump_json({{"n", n},
                    {"ones", row.ones},
                    {"closed_form", row.closed_form},
                    {"n_log2_n", row.n_log2_n},
                    {"ratio", row.ratio},
                    {"floor_holds", row.floor_holds},
                    {"grid", grid},
                    {"matrix", to_json(m)},
                    {"graph", to_json(matrix_to_graph(m))}}));
  return kExitOk;
}

// ------------------------------------------------------------------ certify

int cmd_certify(const Context& c, const std::string& file) {
  c.format({"json"});
  const OrderedBipartiteGraph g = load_bipartite(read_json_file(file));
  const BoundCertificate cert = certify_edge_bound(g);
  const std::vector<std::string> problems = validate_certificate(g, cert);
  Json j = to_json(cert);
  j["problems"] = problems;
  c.emit(dump_json(j));

  std::ostream& s = c.err();
  s << "certificate: |E| = " << cert.edges << ", certified bound = " << cert.certified_bound
    << ", n log2 n + " << cert.constant << " n = " << format_double(cert.nlogn_bound) << ", depth "
    << cert.depth << "\n";
  s << (cert.holds ? "bound holds" : "bound fails") << (problems.empty() ? "" : ", certificate invalid") << "\n";
  for (const std::string& p : problems) s << "  " << p << "\n";
  if (cert.prbg && !*cert.prbg) s << "input is not path-restricted: bound not guaranteed\n";
  return cert.holds && problems.empty() ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------ decompose

int cmd_decompose(const Context& c, const std::string& file, const std::string& svg_path) {
  const std::string fmt = c.format({"json", "svg"});
  const GeometricGraph<double> g = geometric_graph_from_json(read_json_file(file));
  DecomposeOptions options;
  options.tau = c.global().tolerance;
  try {
    const DecompositionResult r = decompose(g, options);
    const std::string svg = fmt == "svg" || !svg_path.empty() ? render_decomposition_svg(g, r) : "";
    if (!svg_path.empty()) write_file(svg_path, svg);
    c.emit(fmt == "svg" ? svg : dump_json(to_json(r)));
    return kExitOk;
  } catch (const DecompositionError& e) {
    c.emit(dump_json({{"error", e.what()},
                      {"failing_graph", e.failing_graph},
                      {"violation", e.violation ? to_json(*e.violation) : Json(nullptr)}}));
    c.err() << "decomposition failed: " << e.what() << "\n";
    return kExitViolation;
  }
}

// ------------------------------------------------------------------ render

int cmd_render(const Context& c, const std::string& file, bool overlay) {
  c.format({"svg"});
  const Json j = read_json_file(file);
  if (!j.is_object()) throw FormatError("render input must be a JSON object");
  if (j.contains("matrix")) {
    c.emit(render_matrix_svg(matrix_from_json(j["matrix"])));
  } else if (j.contains("ones")) {
    c.emit(render_matrix_svg(matrix_from_json(j)));
  } else if (j.contains("u_count")) {
    c.emit(render_matrix_svg(graph_to_matrix(graph_from_json(j))));
  } else if (j.contains("points") && j.contains("edges")) {
    const GeometricGraph<double> g = geometric_graph_from_json(j);
    if (overlay) {
      DecomposeOptions options;
      options.tau = c.global().tolerance;
      c.emit(render_decomposition_svg(g, decompose(g, options)));
    } else {
      c.emit(render_graph_svg(g));
    }
  } else if (j.contains("points")) {
    c.emit(render_points_svg(points_from_json(j)));
  } else {
    throw FormatError("render input is not a point set, graph or matrix");
  }
  return kExitOk;
}

// ------------------------------------------------------------------ experiment

struct ExperimentArgs {
  std::string sweep;
  std::string family = "chain-udg";
  int n_min = 24;
  int n_max = 24;
  double density = 0.3;
  std::vector<int> ns{8, 16, 32, 64, 128, 256, 512};
  std::string summary;
  int min_part = 2;
  int max_part = 7;
};

const char* flag(bool b) { return b ? "true" : "false"; }

std::string str(long long x) { return std::to_string(x); }

struct SweepOutput {
  std::string csv;
  Json summary;
  bool violation = false;
};

SweepOutput sweep_decompose(const SweepConfig& config, const ExperimentArgs& a) {
  std::vector<std::string> families;
  if (a.family == "all") families = decompose_families();
  else families = {a.family};
  SweepOutput o;
  std::vector<DecomposeTrial> all;
  Json per_family = Json::object();
  for (const std::string& f : families) {
    std::vector<DecomposeTrial> rows = run_decompose_sweep(f, config);
    per_family[f] = summarize(rows);
    for (const DecomposeTrial& r : rows)
      o.violation |= !r.verified || !r.error.empty() || r.removed > 3LL * r.n || !r.certificates_ok ||
                     !r.within_bound || !r.noncrossing;
    all.insert(all.end(), rows.begin(), rows.end());
  }
  std::ostringstream os;
  write_decompose_csv(os, all);
  o.csv = os.str();
  o.summary = {{"sweep", "decompose"}, {"families", per_family}};
  return o;
}

SweepOutput sweep_extremal(const ExperimentArgs& a) {
  const std::vector<ExtremalRow> rows = run_extremal_sweep(a.ns);
  SweepOutput o;
  std::ostringstream os;
  write_extremal_csv(os, rows);
  o.csv = os.str();
  bool closed = true, floor = true, monotone = true;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    closed &= rows[k].ones == rows[k].closed_form;
    if (rows[k].n >= 8) floor &= rows[k].floor_holds;
    if (k > 0) monotone &= rows[k].ratio >= rows[k - 1].ratio;
  }
  o.violation = !closed || !floor;
  o.summary = {{"sweep", "extremal"},
               {"rows", rows.size()},
               {"closed_form_matches", closed},
               {"floor_holds", floor},
               {"ratio_nondecreasing", monotone}};
  return o;
}

SweepOutput sweep_p3(const SweepConfig& config, const PrbgSampling& s) {
  const std::vector<P3Trial> rows = run_p3_sweep(config, s);
  SweepOutput o;
  std::ostringstream os;
  CsvWriter csv(os, {"trial", "missing_type", "u_count", "v_count", "edges", "type1", "type2", "type3",
                     "type4", "prbg", "acyclic", "edge_bound", "attempts"});
  long long acyclic = 0, bounded = 0;
  for (const P3Trial& r : rows) {
    csv.row({str(r.trial), str(r.missing_type), str(r.u_count), str(r.v_count), str(r.edges),
             str(r.census.type1), str(r.census.type2), str(r.census.type3), str(r.census.type4), flag(r.prbg),
             flag(r.acyclic), flag(r.edge_bound), str(r.attempts)});
    acyclic += r.acyclic;
    bounded += r.edge_bound;
    o.violation |= !r.prbg || !r.acyclic || !r.edge_bound;
  }
  o.csv = os.str();
  o.summary = {{"sweep", "p3"}, {"trials", rows.size()}, {"acyclic", acyclic}, {"edge_bound", bounded}};
  return o;
}

SweepOutput sweep_structure(const SweepConfig& config, const PrbgSampling& s) {
  const std::vector<StructureTrial> rows = run_structure_sweep(config, s);
  SweepOutput o;
  std::ostringstream os;
  CsvWriter csv(os, {"trial", "u_count", "v_count", "edges", "merges", "paths_checked", "incidence_failures",
                     "span_failures", "tl_failures", "closure_failures"});
  long long ok = 0, paths = 0;
  for (const StructureTrial& r : rows) {
    csv.row({str(r.trial), str(r.u_count), str(r.v_count), str(r.edges), str(r.merges), str(r.paths_checked),
             str(r.incidence_failures), str(r.span_failures), str(r.tl_failures), str(r.closure_failures)});
    ok += r.ok();
    paths += r.paths_checked;
  }
  o.violation = ok != static_cast<long long>(rows.size());
  o.csv = os.str();
  o.summary = {{"sweep", "structure"}, {"trials", rows.size()}, {"ok", ok}, {"paths_checked", paths}};
  return o;
}

SweepOutput sweep_certify(const SweepConfig& config, double density) {
  const std::vector<CertifyTrial> rows = run_certify_sweep(config, density);
  SweepOutput o;
  std::ostringstream os;
  write_certify_csv(os, rows);
  o.csv = os.str();
  long long holds = 0, valid = 0;
  double max_constant = -INFINITY;
  for (const CertifyTrial& r : rows) {
    holds += r.holds;
    valid += r.valid;
    max_constant = std::max(max_constant, r.constant);
  }
  o.violation = holds != static_cast<long long>(rows.size()) || valid != static_cast<long long>(rows.size());
  o.summary = {{"sweep", "certify"},
               {"trials", rows.size()},
               {"holds", holds},
               {"valid", valid},
               {"max_constant", rows.empty() ? Json(nullptr) : Json(max_constant)},
               {"bound_constant", kPrbgBoundConstant}};
  return o;
}

SweepOutput sweep_bounded_path(const SweepConfig& config, const PrbgSampling& s) {
  const std::vector<BoundedPathTrial> rows = run_bounded_path_sweep(config, s);
  SweepOutput o;
  std::ostringstream os;
  CsvWriter csv(os, {"trial", "k", "vertices", "edges", "bound", "peel_rounds", "remaining_acyclic", "holds"});
  long long k3 = 0, holds = 0;
  for (const BoundedPathTrial& t : rows) {
    const BoundedPathReport& r = t.report;
    csv.row({str(t.trial), str(r.k), str(r.vertex_count), str(r.edges), str(r.bound), str(r.peel_rounds),
             flag(r.remaining_acyclic), flag(r.holds)});
    k3 += r.k == 3;
    holds += r.holds;
  }
  o.violation = holds != static_cast<long long>(rows.size());
  o.csv = os.str();
  o.summary = {{"sweep", "bounded-path"}, {"trials", rows.size()}, {"longest_3", k3}, {"holds", holds}};
  return o;
}

SweepOutput sweep_crossing(const SweepConfig& config, const PrbgSampling& s) {
  const std::vector<CrossingTrial> rows = run_crossing_sweep(config, s);
  SweepOutput o;
  std::ostringstream os;
  CsvWriter csv(os, {"trial", "u_count", "v_count", "u_separator", "v_separator", "premise1", "count1", "bound1",
                     "premise2", "count2", "bound2", "holds"});
  long long premise = 0, holds = 0;
  for (const CrossingTrial& t : rows) {
    const CrossingReport& r = t.report;
    csv.row({str(t.trial), str(t.u_count), str(t.v_count), str(t.split.u_separator), str(t.split.v_separator),
             flag(r.premise1), str(r.count1), str(r.bound1), flag(r.premise2), str(r.count2), str(r.bound2),
             flag(r.holds())});
    premise += !r.vacuous();
    holds += !r.vacuous() && r.holds();
  }
  o.violation = holds != premise;
  o.csv = os.str();
  o.summary = {{"sweep", "crossing"}, {"trials", rows.size()}, {"premise_satisfied", premise}, {"holds", holds}};
  return o;
}

int cmd_experiment(const Context& c, const ExperimentArgs& a) {
  const std::string fmt = c.format({"csv", "json"});
  const Global& g = c.global();
  if (g.trials < 0) throw InputError("--trials must be >= 0");
  const SweepConfig config{g.seed, g.trials, a.n_min, a.n_max, g.threads, g.timing};
  const PrbgSampling sampling{a.min_part, a.max_part, {0.3, 0.5, 0.8}};
  SweepOutput o;
  if (a.sweep == "decompose") o = sweep_decompose(config, a);
  else if (a.sweep == "extremal") o = sweep_extremal(a);
  else if (a.sweep == "p3") o = sweep_p3(config, sampling);
  else if (a.sweep == "structure") o = sweep_structure(config, sampling);
  else if (a.sweep == "certify") o = sweep_certify(config, a.density);
  else if (a.sweep == "bounded-path") o = sweep_bounded_path(config, sampling);
  else o = sweep_crossing(config, sampling);
  o.summary["seed"] = g.seed;
  if (fmt == "json") {
    c.emit(dump_json(o.summary));
  } else {
    c.emit(o.csv);
    if (!a.summary.empty()) write_file(a.summary, dump_json(o.summary));
    else c.err() << dump_json(o.summary);
  }
  return o.violation ? kExitViolation : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path-restricted ordered bipartite graphs and convex geometric graphs.", "prbg"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--seed", g.seed, "Master seed")->envname("PRBG_SEED");
  app.add_option("--tolerance", g.tolerance, "Geometric tolerance (relative)")
      ->envname("PRBG_TOLERANCE")
      ->check(CLI::PositiveNumber);
  app.add_option("--eps", g.eps, "Unit-distance tolerance")->envname("PRBG_EPS")->check(CLI::NonNegativeNumber);
  app.add_option("--trials", g.trials, "Trials per sweep")->envname("PRBG_TRIALS")->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out, "Output file (default stdout)")->envname("PRBG_OUT");
  app.add_option("--format", g.format, "Output format")
      ->envname("PRBG_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--threads", g.threads, "Worker threads for sweeps")
      ->envname("PRBG_THREADS")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "Fill the millis column")->envname("PRBG_TIMING");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a strictly convex point set");
  gen->add_option("kind", gen_args.kind, "Point set family")
      ->required()
      ->check(CLI::IsMember({"circle", "unit-chain", "regular", "ellipse", "lens", "zigzag"}));
  gen->add_option("n", gen_args.n, "Number of points")->required();
  gen->add_option("--side", gen_args.side, "Side length for regular polygons")->check(CLI::PositiveNumber);
  gen->add_option("--aspect", gen_args.aspect, "Minor/major axis ratio for ellipses")
      ->check(CLI::Range(1e-6, 1.0));

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "Build a proximity graph on a point set");
  build->add_option("class", build_args.graph_class, "Graph class")
      ->required()
      ->check(CLI::IsMember({"udg", "gabriel", "lgg"}));
  build->add_option("points", build_args.file, "Point set JSON")->required();
  build->add_flag("--shuffle", build_args.shuffle, "Insert LGG candidates in seeded random order");

  FileArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Check a graph property; exit 1 with a witness on failure");
  verify->add_option("target", verify_args.target, "Property")
      ->required()
      ->check(CLI::IsMember({"prbg", "lgg", "sprbg"}));
  verify->add_option("graph", verify_args.file, "Graph JSON")->required();

  int extremal_n = 0;
  CLI::App* extremal = app.add_subcommand("extremal", "Matrix A(n), its graph and counts");
  extremal->add_option("n", extremal_n, "Matrix size")->required();

  std::string certify_file;
  CLI::App* certify = app.add_subcommand("certify", "Certify the edge bound of a bipartite graph");
  certify->add_option("graph", certify_file, "Graph or matrix JSON")->required();

  std::string decompose_file, decompose_svg;
  CLI::App* decomp = app.add_subcommand("decompose", "Split a convex geometric graph into two PRBGs");
  decomp->add_option("graph", decompose_file, "Geometric graph JSON")->required();
  decomp->add_option("--svg", decompose_svg, "Also write an SVG overlay to this file");

  ExperimentArgs exp_args;
  CLI::App* experiment = app.add_subcommand("experiment", "Seeded sweeps: CSV rows plus a summary");
  experiment->add_option("sweep", exp_args.sweep, "Sweep")
      ->required()
      ->check(CLI::IsMember({"decompose", "extremal", "p3", "structure", "certify", "bounded-path", "crossing"}));
  std::vector<std::string> family_names = decompose_families();
  family_names.push_back("all");
  experiment->add_option("--family", exp_args.family, "Decompose instance family")
      ->check(CLI::IsMember(family_names));
  experiment->add_option("--n-min", exp_args.n_min, "Smallest n");
  experiment->add_option("--n-max", exp_args.n_max, "Largest n");
  experiment->add_option("--density", exp_args.density, "Edge density for certify")->check(CLI::Range(0.0, 1.0));
  experiment->add_option("--ns", exp_args.ns, "Sizes for the extremal sweep")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  experiment->add_option("--min-part", exp_args.min_part, "Smallest part size for sampled PRBGs");
  experiment->add_option("--max-part", exp_args.max_part, "Largest part size for sampled PRBGs");
  experiment->add_option("--summary", exp_args.summary, "Write the summary JSON here (default stderr)");

  std::string render_file;
  bool render_overlay = false;
  CLI::App* render = app.add_subcommand("render", "Render a point set, graph or matrix as SVG");
  render->add_option("input", render_file, "JSON input")->required();
  render->add_flag("--overlay", render_overlay, "Draw the decomposition of a geometric graph");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  const Context c(g, out, err);
  try {
    if (*gen) return cmd_gen(c, gen_args);
    if (*build) return cmd_build(c, build_args);
    if (*verify) return cmd_verify(c, verify_args);
    if (*extremal) return cmd_extremal(c, extremal_n);
    if (*certify) return cmd_certify(c, certify_file);
    if (*decomp) return cmd_decompose(c, decompose_file, decompose_svg);
    if (*experiment) return cmd_experiment(c, exp_args);
    return cmd_render(c, render_file, render_overlay);
  } catch (const std::invalid_argument& e) {  // InputError, FormatError
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {  // degenerate geometry
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace prbg::cli
