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

// Seeded sweeps. Each trial draws from its own stream derive_stream(seed,
// trial), trials run on a small thread pool and results come back in trial
// order, so output depends only on the configuration.

#ifndef PRBG_EXPERIMENT_HPP
#define PRBG_EXPERIMENT_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <iosfwd>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "prbg/io.hpp"
#include "prbg/ordered_bipartite.hpp"
#include "prbg/random.hpp"

namespace prbg {

/// Constant of the geometric chain bound |E| <= 2 n log2 n + C n.
inline constexpr double kGeometricBoundConstant = 6.0;

double geometric_edge_bound(int n);

struct SweepConfig {
  std::uint64_t seed = 1;
  int trials = 50;
  int n_min = 24;  ///< sizes drawn uniformly from [n_min, n_max]
  int n_max = 24;
  int threads = 1;
  bool timing = false;  ///< fill the millis column; otherwise it is 0
};

/// Runs fn(trial) for trial in [0, count) on up to `threads` workers and
/// returns results in trial order. The first exception is rethrown.
template <class Fn>
auto parallel_trials(int count, int threads, Fn&& fn) -> std::vector<decltype(fn(0))> {
  using R = decltype(fn(0));
  std::vector<R> out(static_cast<std::size_t>(std::max(count, 0)));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (int t = next++; t < count; t = next++) {
      try {
        out[static_cast<std::size_t>(t)] = fn(t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int n = std::clamp(threads, 1, std::max(count, 1));
  {
    std::vector<std::jthread> pool;
    for (int k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

// ------------------------------------------------------------ decomposition

/// Instance families: chain-udg, circle-lgg, circle-gabriel, zigzag-udg,
/// lens-lgg, ellipse-lgg (the last two insert candidates in shuffled order).
const std::vector<std::string>& decompose_families();

/// The seeded instance of a family.
GeometricGraph<double> family_instance(const std::string& family, int n, std::uint64_t seed);

struct DecomposeTrial {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string family;
  int n = 0;
  long long edges = 0;
  double bound = 0;  ///< geometric_edge_bound(n)
  long long removed = 0;
  bool verified = false;
  std::string error;  ///< pipeline failure, empty on success
  long long g1_edges = 0, g2_edges = 0;
  int longest_path = 0;  ///< over G1' and G2'
  int unstripped_violations = 0;  ///< E1 and E2 graphs that fail before stripping
  bool noncrossing = false;
  bool certificates_ok = false;  ///< both certificates hold and validate
  bool within_bound = false;     ///< edges <= bound
  bool valid_class = false;      ///< input passes is_valid_lgg
  double millis = 0;
};

std::vector<DecomposeTrial> run_decompose_sweep(const std::string& family, const SweepConfig& config);

/// Columns n,class,edges,bound,removed,verified,seed,millis.
void write_decompose_csv(std::ostream& os, const std::vector<DecomposeTrial>& rows);
Json summarize(const std::vector<DecomposeTrial>& rows);

// ------------------------------------------------------------ sampled PRBGs

struct PrbgSampling {
  int min_part = 2;
  int max_part = 7;
  std::vector<double> densities{0.3, 0.5, 0.8};
};

/// Random part sizes and density, then repair sampling.
OrderedBipartiteGraph sample_prbg(Rng& rng, const PrbgSampling& s = {});

struct StructureTrial {
  int trial = 0;
  int u_count = 0, v_count = 0;
  long long edges = 0;
  int merges = 0;               ///< over every root, both directions
  long long paths_checked = 0;  ///< forward paths tested for unique incidence
  int incidence_failures = 0;
  int span_failures = 0;        ///< rightward roots with induced != spanned - 1
  int tl_failures = 0;
  int closure_failures = 0;     ///< single-edge deletions that broke the property
  bool ok() const {
    return merges == 0 && incidence_failures == 0 && span_failures == 0 && tl_failures == 0 &&
           closure_failures == 0;
  }
};

std::vector<StructureTrial> run_structure_sweep(const SweepConfig& config, const PrbgSampling& s = {});

struct P3Trial {
  int trial = 0;
  int attempts = 0;  ///< samples drawn until a non-vacuous one
  int missing_type = 0;
  int u_count = 0, v_count = 0;
  long long edges = 0;
  P3Census census;
  bool prbg = false;
  bool acyclic = false;
  bool edge_bound = false;  ///< |E| <= |U| + |V| - 1
};

/// Samples a PRBG, deletes middle edges until one P3 type is absent, and
/// rejects samples with no 3-edge path left.
std::vector<P3Trial> run_p3_sweep(const SweepConfig& config, const PrbgSampling& s = {});

struct BoundedPathTrial {
  int trial = 0;
  BoundedPathReport report;
};

std::vector<BoundedPathTrial> run_bounded_path_sweep(const SweepConfig& config, const PrbgSampling& s = {});

struct CrossingTrial {
  int trial = 0;
  int u_count = 0, v_count = 0;
  Split split;
  CrossingReport report;
};

/// Random splits are redrawn (bounded) until a premise holds.
std::vector<CrossingTrial> run_crossing_sweep(const SweepConfig& config, const PrbgSampling& s = {});

struct ExtremalRow {
  int n = 0;
  long long ones = 0;
  long long closed_form = 0;
  double n_log2_n = 0;
  double ratio = 0;  ///< ones / (n log2 n)
  bool floor_holds = false;  ///< ones >= n (log2 n - 1)
};

std::vector<ExtremalRow> run_extremal_sweep(const std::vector<int>& ns);
void write_extremal_csv(std::ostream& os, const std::vector<ExtremalRow>& rows);

struct CertifyTrial {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  long long edges = 0;
  double n_log2_n = 0;
  long long certified_bound = 0;
  double constant = 0;  ///< (edges - n log2 n) / n
  bool holds = false;
  bool valid = false;
};

/// PRBGs with about n vertices split evenly; density `p`.
std::vector<CertifyTrial> run_certify_sweep(const SweepConfig& config, double p);
void write_certify_csv(std::ostream& os, const std::vector<CertifyTrial>& rows);

}  // namespace prbg

#endif  // PRBG_EXPERIMENT_HPP
