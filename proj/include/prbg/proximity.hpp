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

// Unit distance, Gabriel and locally Gabriel graphs on planar point sets.
// Disks are closed throughout: a point on the boundary circle is inside.

#ifndef PRBG_PROXIMITY_HPP
#define PRBG_PROXIMITY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prbg/geometry.hpp"
#include "prbg/random.hpp"

namespace prbg {

enum class GraphClass { udg, gabriel, lgg_candidate };

inline std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::udg: return "udg";
    case GraphClass::gabriel: return "gabriel";
    default: return "lgg";
  }
}

/// Throws InputError on an unknown name. Accepts "lgg" and "lgg-candidate".
inline GraphClass graph_class_from_string(const std::string& s) {
  if (s == "udg") return GraphClass::udg;
  if (s == "gabriel") return GraphClass::gabriel;
  if (s == "lgg" || s == "lgg-candidate") return GraphClass::lgg_candidate;
  throw InputError("unknown graph class '" + s + "'");
}

/// 0-based point index pair with i < j.
struct PointPair {
  int i = 0;
  int j = 0;
  friend constexpr auto operator<=>(const PointPair&, const PointPair&) = default;
};

template <class Scalar>
struct GeometricGraph {
  Points2<Scalar> points;
  std::vector<PointPair> edges;  ///< sorted, i < j
  GraphClass tag = GraphClass::lgg_candidate;

  int size() const { return static_cast<int>(points.cols()); }

  /// Sorts the edges; throws InputError on a bad index, self-loop or duplicate.
  void normalize() {
    for (PointPair& e : edges) {
      if (e.i > e.j) std::swap(e.i, e.j);
      if (e.i < 0 || e.j >= size()) throw InputError("edge index out of range");
      if (e.i == e.j) throw InputError("self-loop");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw InputError("duplicate edge");
  }

  /// Sorted neighbour lists.
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(size()));
    for (const PointPair& e : edges) {
      adj[static_cast<std::size_t>(e.i)].push_back(e.j);
      adj[static_cast<std::size_t>(e.j)].push_back(e.i);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }
};

/// Pairs at distance 1 within eps.
template <class Scalar>
GeometricGraph<Scalar> unit_distance_graph(const Points2<Scalar>& p, Scalar eps = Scalar(1e-9)) {
  if (eps < Scalar(0)) throw InputError("eps must be non-negative");
  GeometricGraph<Scalar> g{p, {}, GraphClass::udg};
  const int n = g.size();
  using std::abs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (abs((p.col(i) - p.col(j)).norm() - Scalar(1)) <= eps) g.edges.push_back({i, j});
  return g;
}

/// Pairs whose closed diameter disk holds no third point: every third point
/// sees the pair under an acute angle.
template <class Scalar>
GeometricGraph<Scalar> gabriel_graph(const Points2<Scalar>& p, Scalar tau = Scalar(kTolerance)) {
  GeometricGraph<Scalar> g{p, {}, GraphClass::gabriel};
  const int n = g.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool empty = true;
      for (int k = 0; k < n && empty; ++k)
        if (k != i && k != j) empty = is_acute<Scalar>(p.col(i), p.col(k), p.col(j), tau);
      if (empty) g.edges.push_back({i, j});
    }
  return g;
}

/// Edges (u,v) and (u,w) conflict: w lies in the disk on uv, or v in the disk on uw.
template <class Scalar>
bool lgg_conflict(const Point2<Scalar>& u, const Point2<Scalar>& v, const Point2<Scalar>& w,
                  Scalar tau = Scalar(kTolerance)) {
  return !is_acute<Scalar>(u, w, v, tau) || !is_acute<Scalar>(u, v, w, tau);
}

/// Two conflicting edges (u,v) and (u,w) sharing u.
struct ConflictWitness {
  int u = 0;
  int v = 0;
  int w = 0;
};

template <class Scalar>
std::optional<ConflictWitness> is_valid_lgg(const GeometricGraph<Scalar>& g,
                                             Scalar tau = Scalar(kTolerance)) {
  const auto adj = g.adjacency();
  for (int u = 0; u < g.size(); ++u) {
    const auto& nb = adj[static_cast<std::size_t>(u)];
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (lgg_conflict<Scalar>(g.points.col(u), g.points.col(nb[a]), g.points.col(nb[b]), tau))
          return ConflictWitness{u, nb[a], nb[b]};
  }
  return std::nullopt;
}

/// Candidate order for greedy_max_lgg: by (length, i, j), or a seeded shuffle.
struct GreedyOrder {
  bool shuffled = false;
  std::uint64_t seed = 0;
};

namespace detail {

template <class Scalar>
bool can_add_lgg_edge(const Points2<Scalar>& p, const std::vector<std::vector<int>>& adj, int i, int j,
                      Scalar tau) {
  for (auto [a, b] : {std::pair(i, j), std::pair(j, i)})
    for (int w : adj[static_cast<std::size_t>(a)])
      if (lgg_conflict<Scalar>(p.col(a), p.col(b), p.col(w), tau)) return false;
  return true;
}

}  // namespace detail

/// Inserts each candidate pair that conflicts with no earlier insertion.
template <class Scalar>
GeometricGraph<Scalar> greedy_max_lgg(const Points2<Scalar>& p, GreedyOrder order = {},
                                      Scalar tau = Scalar(kTolerance)) {
  GeometricGraph<Scalar> g{p, {}, GraphClass::lgg_candidate};
  const int n = g.size();
  std::vector<PointPair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  if (order.shuffled) {
    Rng rng(order.seed);
    rng.shuffle(pairs);
  } else {
    std::vector<std::pair<Scalar, PointPair>> keyed;
    for (const PointPair& q : pairs) keyed.emplace_back((p.col(q.i) - p.col(q.j)).norm(), q);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < keyed.size(); ++k) pairs[k] = keyed[k].second;
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const PointPair& q : pairs) {
    if (!detail::can_add_lgg_edge<Scalar>(p, adj, q.i, q.j, tau)) continue;
    g.edges.push_back(q);
    adj[static_cast<std::size_t>(q.i)].push_back(q.j);
    adj[static_cast<std::size_t>(q.j)].push_back(q.i);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// First absent pair that could be added without a conflict, if any.
template <class Scalar>
std::optional<PointPair> addable_lgg_edge(const GeometricGraph<Scalar>& g, Scalar tau = Scalar(kTolerance)) {
  const auto adj = g.adjacency();
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) {
      if (std::binary_search(g.edges.begin(), g.edges.end(), PointPair{i, j})) continue;
      if (detail::can_add_lgg_edge<Scalar>(g.points, adj, i, j, tau)) return PointPair{i, j};
    }
  return std::nullopt;
}

template <class Scalar>
bool is_maximal_lgg(const GeometricGraph<Scalar>& g, Scalar tau = Scalar(kTolerance)) {
  return !addable_lgg_edge<Scalar>(g, tau);
}

}  // namespace prbg

#endif  // PRBG_PROXIMITY_HPP
