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


// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <string>

#include "oracles.hpp"
#include "prbg/experiment.hpp"
#include "prbg/extremal.hpp"
#include "prbg/generators.hpp"
#include "prbg/prbg_structure.hpp"

using namespace prbg;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  failures += !o.pass;
  std::printf("%s %s %s: %s (%.2fs)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string str(long long x) { return std::to_string(x); }
std::string str(int x) { return std::to_string(x); }

std::string str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

// Point sets from every generator, sizes 3..max_n.
template <class Fn>
void for_each_convex_set(int max_n, int seeds, Fn&& fn) {
  for (int n = 3; n <= max_n; ++n) {
    fn(gen_regular(n));
    for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(seeds); ++s) {
      const std::uint64_t seed = derive_stream(static_cast<std::uint64_t>(n), s);
      fn(gen_circle_points(n, seed));
      fn(gen_unit_edge_chain(n, seed));
      fn(gen_ellipse_points(n, seed, 0.05 + 0.9 * Rng(seed).uniform01()));
      fn(gen_lens_points(n, seed));
      fn(gen_zigzag_points(n, seed));
    }
  }
}

}  // namespace

int main() {
  criterion("AC1", "extremal lower bound", [] {
    const auto t0 = Clock::now();
    Outcome o;
    o.pass = build_matrix_A(8).ones_count() == 21;
    int checked = 0;
    for (int n = 4; n <= 1024; n *= 2) {
      const auto ones = static_cast<long long>(build_matrix_A(n).ones_count());
      o.pass &= ones == ones_count_closed_form(n);
      if (n >= 8) o.pass &= static_cast<double>(ones) >= n * (std::log2(static_cast<double>(n)) - 1);
      ++checked;
    }
    const double secs = seconds_since(t0);
    o.pass &= secs < 1.0;
    o.detail = "ones(8)=" + str(static_cast<long long>(build_matrix_A(8).ones_count())) + ", closed form and floor on " +
               str(checked) + " sizes, " + str(secs) + "s < 1s";
    return o;
  });

  criterion("AC2", "matrix A is path-restricted", [] {
    Outcome o;
    for (int n : {8, 16}) {
      const auto t0 = Clock::now();
      const bool ok = is_prbg(matrix_to_graph(build_matrix_A(n)));
      const double secs = seconds_since(t0);
      o.pass &= ok && secs < 60;
      o.detail += "A(" + str(n) + ") " + (ok ? "Ok" : "Violation") + " in " + str(secs) + "s; ";
    }
    return o;
  });

  // Criteria 3 and 4 share the instances.
  std::vector<DecomposeTrial> literal, enriched;
  const auto t3 = Clock::now();
  for (const std::string& family : {std::string("chain-udg"), std::string("circle-lgg")}) {
    const auto rows = run_decompose_sweep(family, {20260101, 50, 6, 24, 1, false});
    literal.insert(literal.end(), rows.begin(), rows.end());
  }
  for (const std::string& family : {std::string("circle-gabriel"), std::string("zigzag-udg"), std::string("lens-lgg"),
                                    std::string("ellipse-lgg")}) {
    const auto rows = run_decompose_sweep(family, {20260101, 50, 6, 24, 1, false});
    enriched.insert(enriched.end(), rows.begin(), rows.end());
  }
  const double decompose_secs = seconds_since(t3);

  criterion("AC3", "decomposition soundness", [&] {
    Outcome o;
    long long checks = 0, ok_checks = 0, budget = 0, longest = 0, unstripped = 0, surviving = 0;
    for (const auto* rows : {&literal, &enriched})
      for (const DecomposeTrial& r : *rows) {
        checks += 2;
        ok_checks += r.error.empty() && r.verified ? 2 : 0;
        budget += r.error.empty() && r.removed <= 3LL * r.n;
        longest = std::max<long long>(longest, r.longest_path);
        unstripped += r.unstripped_violations;
        surviving += r.g1_edges + r.g2_edges;
      }
    const auto trials = static_cast<long long>(literal.size() + enriched.size());
    o.pass = literal.size() == 100 && ok_checks == checks && budget == trials && decompose_secs < 300;
    o.detail = str(ok_checks) + "/" + str(checks) + " graph checks Ok over " + str(trials) + " trials (" +
               str(static_cast<long long>(literal.size())) + " chain-udg/circle-lgg), removed <= 3n in " +
               str(budget) + "; surviving edges " + str(surviving) + ", longest surviving forward path " +
               str(longest) + ", unstripped E1/E2 violations " + str(unstripped) + ", sweep " +
               str(decompose_secs) + "s < 300s";
    return o;
  });

  criterion("AC4", "upper-bound chain", [&] {
    Outcome o;
    long long within = 0, certs = 0, total = 0;
    double worst = -1e9;
    for (const auto* rows : {&literal, &enriched})
      for (const DecomposeTrial& r : *rows) {
        ++total;
        within += r.within_bound;
        certs += r.certificates_ok;
        worst = std::max(worst, (static_cast<double>(r.edges) - 2 * r.n * std::log2(static_cast<double>(r.n))) / r.n);
      }
    o.pass = within == total && certs == total && kGeometricBoundConstant <= 6;
    o.detail = str(within) + "/" + str(total) + " within 2 n log2 n + " + str(kGeometricBoundConstant) + " n (largest needed C " +
               str(worst) + "), " + str(certs) + "/" + str(total) +
               " certificate pairs valid";
    return o;
  });

  criterion("AC5", "structural property suite", [] {
    const auto rows = run_structure_sweep({777, 250, 0, 0, 1, false}, {2, 7, {0.3, 0.5, 0.8}});
    Outcome o;
    long long ok = 0, paths = 0, merges = 0, max_vertices = 0;
    for (const StructureTrial& t : rows) {
      ok += t.ok();
      paths += t.paths_checked;
      merges += t.merges;
      max_vertices = std::max<long long>(max_vertices, t.u_count + t.v_count);
    }
    o.pass = rows.size() >= 200 && ok == static_cast<long long>(rows.size()) && max_vertices <= 14;
    o.detail = str(ok) + "/" + str(static_cast<long long>(rows.size())) + " instances clean, " + str(merges) +
               " merge events, " + str(paths) + " paths checked, |U|+|V| <= " + str(max_vertices);
    return o;
  });

  criterion("AC6", "P3 acyclicity", [] {
    const auto rows = run_p3_sweep({606, 100, 0, 0, 1, false});
    Outcome o;
    long long ok = 0;
    for (const P3Trial& t : rows) ok += t.prbg && t.acyclic && t.edge_bound && t.census.total() > 0;
    o.pass = rows.size() == 100 && ok == 100;
    o.detail = str(ok) + "/100 acyclic with |E| <= |U|+|V|-1";
    return o;
  });

  criterion("AC7", "bounded-path bound", [] {
    const auto rows = run_bounded_path_sweep({707, 1500, 0, 0, 1, false});
    Outcome o;
    long long k3 = 0, k3_ok = 0, all_ok = 0;
    for (const BoundedPathTrial& t : rows) {
      all_ok += t.report.holds;
      if (t.report.k != 3) continue;
      ++k3;
      k3_ok += t.report.edges <= 2LL * t.report.vertex_count - 1;
    }
    o.pass = k3 >= 100 && k3_ok == k3 && all_ok == static_cast<long long>(rows.size());
    o.detail = str(k3_ok) + "/" + str(k3) + " longest-path-3 samples within 2(|U|+|V|)-1; general bound " +
               str(all_ok) + "/" + str(static_cast<long long>(rows.size()));
    return o;
  });

  criterion("AC8", "crossing bound", [] {
    const auto rows = run_crossing_sweep({808, 1300, 0, 0, 1, false});
    Outcome o;
    long long used = 0, ok = 0;
    for (const CrossingTrial& t : rows) {
      if (t.report.vacuous() || used == 1000) continue;
      ++used;
      ok += t.report.holds();
    }
    o.pass = used == 1000 && ok == 1000;
    o.detail = str(ok) + "/" + str(used) + " (graph, split) pairs with a premise satisfy the bound";
    return o;
  });

  criterion("AC9", "class inclusions", [] {
    Outcome o;
    long long udg = 0, udg_ok = 0, gab = 0, gab_ok = 0, oracle_cases = 0, agree = 0, accepted = 0;
    Rng rng(909);
    for_each_convex_set(32, 3, [&](const Points2<double>& p) {
      const auto u = unit_distance_graph(p);
      const auto g = gabriel_graph(p);
      ++udg, ++gab;
      udg_ok += !is_valid_lgg(u).has_value();
      gab_ok += !is_valid_lgg(g).has_value();
      GeometricGraph<double> random{p, {}, GraphClass::lgg_candidate};
      const double density = rng.uniform(0.05, 0.5);
      for (int i = 0; i < random.size(); ++i)
        for (int j = i + 1; j < random.size(); ++j)
          if (rng.bernoulli(density)) random.edges.push_back({i, j});
      const auto greedy = greedy_max_lgg(p, {true, rng.next()});
      for (const GeometricGraph<double>* h :
           std::initializer_list<const GeometricGraph<double>*>{&u, &g, &random, &greedy}) {
        const bool valid = !is_valid_lgg(*h).has_value();
        ++oracle_cases;
        accepted += valid;
        agree += valid == oracle::is_valid_lgg(*h);
      }
    });
    o.pass = udg_ok == udg && gab_ok == gab && agree == oracle_cases;
    o.detail = "UDG " + str(udg_ok) + "/" + str(udg) + ", Gabriel " + str(gab_ok) + "/" + str(gab) +
               " valid LGGs; angle test matches disk oracle on " + str(agree) + "/" + str(oracle_cases) +
               " graphs (" + str(accepted) + " valid)";
    return o;
  });

  criterion("AC10", "antipodal oracle equivalence", [] {
    Outcome o;
    long long sets = 0, agree = 0;
    for_each_convex_set(64, 3, [&](const Points2<double>& p) {
      ++sets;
      agree += antipodal_pairs<double>(p) == oracle::antipodal_pairs<double>(p);
    });
    o.pass = agree == sets;
    o.detail = str(agree) + "/" + str(sets) + " convex sets, n <= 64";
    return o;
  });

  criterion("AC11", "unit-edge chain floor", [] {
    Outcome o;
    long long sets = 0, ok = 0;
    for (int n = 3; n <= 64; ++n)
      for (std::uint64_t s = 0; s < 5; ++s) {
        ++sets;
        ok += unit_distance_graph(gen_unit_edge_chain(n, derive_stream(1111, s))).edges.size() >=
              static_cast<std::size_t>(n - 1);
      }
    o.pass = ok == sets;
    o.detail = str(ok) + "/" + str(sets) + " chains with >= n-1 unit edges";
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
