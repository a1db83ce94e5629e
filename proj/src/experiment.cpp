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

#include "prbg/experiment.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "prbg/decomposition.hpp"
#include "prbg/extremal.hpp"
#include "prbg/generators.hpp"
#include "prbg/prbg_structure.hpp"
#include "prbg/proximity.hpp"

namespace prbg {

double geometric_edge_bound(int n) {
  return 2.0 * n * std::log2(static_cast<double>(n)) + kGeometricBoundConstant * n;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const char* flag(bool b) { return b ? "true" : "false"; }

bool certificate_ok(const OrderedBipartiteGraph& g) {
  const BoundCertificate c = certify_edge_bound(g, {false});
  return c.holds && validate_certificate(g, c).empty();
}

}  // namespace

GeometricGraph<double> family_instance(const std::string& family, int n, std::uint64_t seed) {
  if (family == "chain-udg") return unit_distance_graph<double>(gen_unit_edge_chain(n, seed));
  if (family == "circle-lgg") return greedy_max_lgg<double>(gen_circle_points(n, seed));
  if (family == "circle-gabriel") return gabriel_graph<double>(gen_circle_points(n, seed));
  if (family == "zigzag-udg") return unit_distance_graph<double>(gen_zigzag_points(n, seed));
  if (family == "lens-lgg") return greedy_max_lgg<double>(gen_lens_points(n, seed), {true, seed});
  if (family == "ellipse-lgg") {
    Rng rng(seed ^ 0xE111D5EULL);
    return greedy_max_lgg<double>(gen_ellipse_points(n, seed, rng.uniform(0.02, 0.3)), {true, seed});
  }
  throw InputError("unknown family '" + family + "'");
}

const std::vector<std::string>& decompose_families() {
  static const std::vector<std::string> families{"chain-udg",  "circle-lgg", "circle-gabriel",
                                                 "zigzag-udg", "lens-lgg",   "ellipse-lgg"};
  return families;
}

std::vector<DecomposeTrial> run_decompose_sweep(const std::string& family, const SweepConfig& config) {
  if (std::find(decompose_families().begin(), decompose_families().end(), family) ==
      decompose_families().end())
    throw InputError("unknown family '" + family + "'");
  if (config.n_min < 3 || config.n_max < config.n_min) throw InputError("need 3 <= n_min <= n_max");
  return parallel_trials(config.trials, config.threads, [&](int t) {
    DecomposeTrial r;
    r.trial = t;
    r.seed = derive_stream(config.seed, static_cast<std::uint64_t>(t));
    r.family = family;
    Rng rng(r.seed);
    r.n = rng.uniform_int(config.n_min, config.n_max);
    const auto t0 = Clock::now();
    const GeometricGraph<double> g = family_instance(family, r.n, splitmix64(r.seed));
    r.edges = static_cast<long long>(g.edges.size());
    r.bound = geometric_edge_bound(r.n);
    r.within_bound = static_cast<double>(r.edges) <= r.bound;
    r.valid_class = !is_valid_lgg<double>(g);
    try {
      const DecompositionResult d = decompose<double>(g);
      r.removed = d.total_removed();
      r.verified = d.verified;
      r.g1_edges = static_cast<long long>(d.g1.edge_count());
      r.g2_edges = static_cast<long long>(d.g2.edge_count());
      r.longest_path = std::max(longest_forward_path_length(d.g1), longest_forward_path_length(d.g2));
      r.noncrossing = check_forwardpath_noncrossing<double>(d, g.points);
      const int uc = static_cast<int>(d.u_points.size()), vc = static_cast<int>(d.v_points.size());
      r.unstripped_violations = !is_prbg(OrderedBipartiteGraph(uc, vc, d.e1)) +
                                !is_prbg(reverse_orders(OrderedBipartiteGraph(uc, vc, d.e2)));
      r.certificates_ok = certificate_ok(d.g1) && certificate_ok(d.g2);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    if (config.timing) r.millis = elapsed_ms(t0);
    return r;
  });
}

void write_decompose_csv(std::ostream& os, const std::vector<DecomposeTrial>& rows) {
  CsvWriter csv(os, {"n", "class", "edges", "bound", "removed", "verified", "seed", "millis"});
  for (const DecomposeTrial& r : rows)
    csv.row({std::to_string(r.n), r.family, std::to_string(r.edges), format_double(r.bound),
             std::to_string(r.removed), flag(r.verified), std::to_string(r.seed), format_double(r.millis)});
}

Json summarize(const std::vector<DecomposeTrial>& rows) {
  long long verified = 0, within = 0, removed_ok = 0, certs = 0, noncrossing = 0, valid = 0;
  long long max_edges = 0, surviving = 0, unstripped = 0;
  int max_longest = 0;
  Json errors = Json::array();
  for (const DecomposeTrial& r : rows) {
    verified += r.verified;
    within += r.within_bound;
    removed_ok += r.error.empty() && r.removed <= 3LL * r.n;
    certs += r.certificates_ok;
    noncrossing += r.noncrossing;
    valid += r.valid_class;
    max_edges = std::max(max_edges, r.edges);
    surviving += r.g1_edges + r.g2_edges;
    unstripped += r.unstripped_violations;
    max_longest = std::max(max_longest, r.longest_path);
    if (!r.error.empty()) errors.push_back({{"trial", r.trial}, {"error", r.error}});
  }
  return {{"trials", rows.size()},         {"verified", verified},
          {"removed_within_3n", removed_ok}, {"within_edge_bound", within},
          {"certificates_ok", certs},      {"noncrossing", noncrossing},
          {"valid_lgg", valid},            {"max_edges", max_edges},
          {"surviving_edges", surviving},  {"unstripped_violations", unstripped},  {"max_longest_forward_path", max_longest},
          {"bound_constant", kGeometricBoundConstant}, {"errors", errors}};
}

OrderedBipartiteGraph sample_prbg(Rng& rng, const PrbgSampling& s) {
  if (s.min_part < 1 || s.max_part < s.min_part || s.densities.empty())
    throw InputError("bad sampling parameters");
  const int uc = rng.uniform_int(s.min_part, s.max_part);
  const int vc = rng.uniform_int(s.min_part, s.max_part);
  const double p = s.densities[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(s.densities.size()) - 1))];
  return repair_sample_prbg(uc, vc, p, rng);
}

std::vector<StructureTrial> run_structure_sweep(const SweepConfig& config, const PrbgSampling& s) {
  return parallel_trials(config.trials, config.threads, [&](int t) {
    Rng rng(derive_stream(config.seed, static_cast<std::uint64_t>(t)));
    const OrderedBipartiteGraph g = sample_prbg(rng, s);
    StructureTrial r;
    r.trial = t;
    r.u_count = g.u_count();
    r.v_count = g.v_count();
    r.edges = static_cast<long long>(g.edge_count());
    std::vector<Vertex> roots;
    for (int i = 1; i <= g.u_count(); ++i) roots.push_back(u_vertex(i));
    for (int j = 1; j <= g.v_count(); ++j) roots.push_back(v_vertex(j));
    for (const Vertex& x : roots) {
      for (Direction d : {Direction::rightward, Direction::leftward})
        r.merges += std::holds_alternative<MergeEvent>(build_path_tree(g, x, d));
      try {
        const SpanCount c = tree_span_edge_count(g, x, Direction::rightward);
        r.span_failures += c.induced_edges != c.spanned - 1;
      } catch (const MergeError&) {
        ++r.span_failures;
      }
      r.tl_failures += !check_disjoint_tl_ranges(g, x);
    }
    for_each_forward_path(g, 1, [&](const ForwardPath& p) {
      ++r.paths_checked;
      r.incidence_failures += !check_unique_incidence(g, p);
      return true;
    });
    for (int k = 0; k < 3 && g.edge_count() > 0; ++k) {
      const auto drop = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(g.edge_count()) - 1));
      std::vector<Edge> keep = g.edges();
      keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(drop));
      r.closure_failures += !is_prbg(with_edges(g, std::move(keep)));
    }
    return r;
  });
}

namespace {

// Deletes the middle edge of a P3 of `type` until none is left.
OrderedBipartiteGraph force_p3_absent(OrderedBipartiteGraph g, int type) {
  for (;;) {
    std::optional<Edge> middle;
    for (const Edge& e : g.edges()) {
      for (int ve : g.u_neighbors(e.u)) {
        if (ve == e.v) continue;
        for (int ue : g.v_neighbors(e.v)) {
          if (ue == e.u) continue;
          if (p3_type({v_vertex(ve), u_vertex(e.u), v_vertex(e.v), u_vertex(ue)}) == type) middle = e;
          if (middle) break;
        }
        if (middle) break;
      }
      if (middle) break;
    }
    if (!middle) return g;
    std::vector<Edge> keep;
    for (const Edge& e : g.edges())
      if (e != *middle) keep.push_back(e);
    g = with_edges(g, std::move(keep));
  }
}

constexpr int kMaxAttempts = 1000;

}  // namespace

std::vector<P3Trial> run_p3_sweep(const SweepConfig& config, const PrbgSampling& s) {
  return parallel_trials(config.trials, config.threads, [&](int t) {
    Rng rng(derive_stream(config.seed, static_cast<std::uint64_t>(t)));
    P3Trial r;
    r.trial = t;
    r.missing_type = 1 + t % 4;
    for (r.attempts = 1; r.attempts <= kMaxAttempts; ++r.attempts) {
      const OrderedBipartiteGraph g = force_p3_absent(sample_prbg(rng, s), r.missing_type);
      r.census = classify_p3(g);
      if (r.census.total() == 0) continue;
      r.u_count = g.u_count();
      r.v_count = g.v_count();
      r.edges = static_cast<long long>(g.edge_count());
      const AcyclicityReport a = assert_acyclic_if_type_missing(g);
      r.prbg = a.prbg;
      r.acyclic = a.status == AcyclicityReport::Status::ok;
      r.edge_bound = r.edges <= r.u_count + r.v_count - 1;
      return r;
    }
    throw std::runtime_error("no non-vacuous P3 sample after " + std::to_string(kMaxAttempts) + " attempts");
  });
}

std::vector<BoundedPathTrial> run_bounded_path_sweep(const SweepConfig& config, const PrbgSampling& s) {
  return parallel_trials(config.trials, config.threads, [&](int t) {
    Rng rng(derive_stream(config.seed, static_cast<std::uint64_t>(t)));
    return BoundedPathTrial{t, check_bounded_path_bound(sample_prbg(rng, s))};
  });
}

std::vector<CrossingTrial> run_crossing_sweep(const SweepConfig& config, const PrbgSampling& s) {
  return parallel_trials(config.trials, config.threads, [&](int t) {
    Rng rng(derive_stream(config.seed, static_cast<std::uint64_t>(t)));
    const OrderedBipartiteGraph g = sample_prbg(rng, s);
    CrossingTrial r;
    r.trial = t;
    r.u_count = g.u_count();
    r.v_count = g.v_count();
    for (int k = 0; k < 64; ++k) {
      r.split = {rng.uniform_int(0, g.u_count()), rng.uniform_int(0, g.v_count())};
      r.report = crossing_edge_bound(g, r.split);
      if (!r.report.vacuous()) break;
    }
    return r;
  });
}

std::vector<ExtremalRow> run_extremal_sweep(const std::vector<int>& ns) {
  std::vector<ExtremalRow> rows;
  for (int n : ns) {
    ExtremalRow r;
    r.n = n;
    r.ones = static_cast<long long>(build_matrix_A(n).ones_count());
    r.closed_form = ones_count_closed_form(n);
    r.n_log2_n = n * std::log2(static_cast<double>(n));
    r.ratio = r.n_log2_n > 0 ? static_cast<double>(r.ones) / r.n_log2_n : 0;
    r.floor_holds = static_cast<double>(r.ones) >= n * (std::log2(static_cast<double>(n)) - 1);
    rows.push_back(r);
  }
  return rows;
}

void write_extremal_csv(std::ostream& os, const std::vector<ExtremalRow>& rows) {
  CsvWriter csv(os, {"n", "ones", "closed_form", "n_log2_n", "ratio", "floor_holds"});
  for (const ExtremalRow& r : rows)
    csv.row({std::to_string(r.n), std::to_string(r.ones), std::to_string(r.closed_form),
             format_double(r.n_log2_n), format_double(r.ratio), flag(r.floor_holds)});
}

std::vector<CertifyTrial> run_certify_sweep(const SweepConfig& config, double p) {
  if (config.n_min < 2 || config.n_max < config.n_min) throw InputError("need 2 <= n_min <= n_max");
  return parallel_trials(config.trials, config.threads, [&](int t) {
    CertifyTrial r;
    r.trial = t;
    r.seed = derive_stream(config.seed, static_cast<std::uint64_t>(t));
    Rng rng(r.seed);
    const int n = rng.uniform_int(config.n_min, config.n_max);
    const OrderedBipartiteGraph g = repair_sample_prbg(n / 2, n - n / 2, p, rng);
    const BoundCertificate c = certify_edge_bound(g, {false});
    r.n = g.vertex_count();
    r.edges = c.edges;
    r.n_log2_n = r.n * std::log2(static_cast<double>(r.n));
    r.certified_bound = c.certified_bound;
    r.constant = (static_cast<double>(r.edges) - r.n_log2_n) / r.n;
    r.holds = c.holds;
    r.valid = validate_certificate(g, c).empty();
    return r;
  });
}

void write_certify_csv(std::ostream& os, const std::vector<CertifyTrial>& rows) {
  CsvWriter csv(os, {"n", "edges", "n_log2_n", "certified_bound", "constant", "holds", "valid", "seed"});
  for (const CertifyTrial& r : rows)
    csv.row({std::to_string(r.n), std::to_string(r.edges), format_double(r.n_log2_n),
             std::to_string(r.certified_bound), format_double(r.constant), flag(r.holds), flag(r.valid),
             std::to_string(r.seed)});
}

}  // namespace prbg
