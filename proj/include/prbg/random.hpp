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

// Seeded randomness. std::mt19937_64 is specified bit-for-bit by the standard;
// the distributions are not, so the few needed here are written out to keep
// outputs identical across standard libraries.

#ifndef PRBG_RANDOM_HPP
#define PRBG_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "prbg/ordered_bipartite.hpp"

namespace prbg {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent stream for one trial of a sweep.
inline std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t trial) {
  return splitmix64(splitmix64(master_seed) ^ splitmix64(trial + 0x632BE59BD9B4E019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [lo, hi], rejection sampled.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + static_cast<int>(x % span);
  }
  bool bernoulli(double p) { return uniform01() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform_int(0, static_cast<int>(i) - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Each of the u_count * v_count pairs independently with probability p.
inline OrderedBipartiteGraph random_bipartite(int u_count, int v_count, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 1; u <= u_count; ++u)
    for (int v = 1; v <= v_count; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return OrderedBipartiteGraph(u_count, v_count, std::move(edges));
}

/// Deletes reported back edges until the graph is path-restricted.
inline OrderedBipartiteGraph repair_to_prbg(OrderedBipartiteGraph g) {
  while (auto v = verify_path_restricted(g)) {
    std::vector<Edge> keep;
    for (const Edge& e : g.edges())
      if (e != v->back_edge) keep.push_back(e);
    g = with_edges(g, std::move(keep));
  }
  return g;
}

inline OrderedBipartiteGraph repair_sample_prbg(int u_count, int v_count, double p, Rng& rng) {
  return repair_to_prbg(random_bipartite(u_count, v_count, p, rng));
}

}  // namespace prbg

#endif  // PRBG_RANDOM_HPP
