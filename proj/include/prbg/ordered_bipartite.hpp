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

#ifndef PRBG_ORDERED_BIPARTITE_HPP
#define PRBG_ORDERED_BIPARTITE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prbg {

/// Malformed caller input (out-of-range index, duplicate edge, bad path...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Part { U, V };

inline constexpr Part other(Part p) { return p == Part::U ? Part::V : Part::U; }

/// A part-tagged vertex. Indices are 1-based; a larger index is higher in the
/// part's linear order.
struct Vertex {
  Part part = Part::U;
  int index = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline constexpr Vertex u_vertex(int i) { return {Part::U, i}; }
inline constexpr Vertex v_vertex(int j) { return {Part::V, j}; }

std::string to_string(const Vertex& x);

struct Edge {
  int u = 0;
  int v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered bipartite graph G = (U, V, <_U, <_V, E) with U = {1..u_count},
/// V = {1..v_count} ordered by index. Immutable once built; edges are kept
/// sorted and neighbourhoods are stored in CSR form, both sorted ascending.
class OrderedBipartiteGraph {
 public:
  /// Throws InputError if a count is not positive, an edge is out of range,
  /// or an edge appears twice.
  OrderedBipartiteGraph(int u_count, int v_count, std::vector<Edge> edges);

  int u_count() const { return u_count_; }
  int v_count() const { return v_count_; }
  int vertex_count() const { return u_count_ + v_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  bool contains(const Vertex& x) const;

  /// Sorted V-neighbours of u.
  std::span<const int> u_neighbors(int u) const;
  /// Sorted U-neighbours of v.
  std::span<const int> v_neighbors(int v) const;
  std::span<const int> neighbors(const Vertex& x) const;
  int degree(const Vertex& x) const { return static_cast<int>(neighbors(x).size()); }

  friend bool operator==(const OrderedBipartiteGraph& a, const OrderedBipartiteGraph& b) {
    return a.u_count_ == b.u_count_ && a.v_count_ == b.v_count_ && a.edges_ == b.edges_;
  }

 private:
  int u_count_;
  int v_count_;
  std::vector<Edge> edges_;
  std::vector<int> u_offsets_, u_adj_;
  std::vector<int> v_offsets_, v_adj_;
};

/// Same graph with one edge set replaced; counts are kept.
OrderedBipartiteGraph with_edges(const OrderedBipartiteGraph& g, std::vector<Edge> edges);

/// Alternating, part-tagged vertex sequence.
struct ForwardPath {
  std::vector<Vertex> vertices;

  int edge_count() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  /// The path's edges in traversal order.
  std::vector<Edge> edges() const;
  friend bool operator==(const ForwardPath&, const ForwardPath&) = default;
};

std::string to_string(const ForwardPath& p);

/// Index rectangle spanned by a forward path.
struct PathRange {
  int u_min = 0, u_max = 0;
  int v_min = 0, v_max = 0;
  friend bool operator==(const PathRange&, const PathRange&) = default;
};

enum class ViolationSide {
  v_side,  ///< back edge (u, v_min) past the first internal U-vertex
  u_side,  ///< back edge (u_min, v) past the first internal V-vertex
};

struct Violation {
  ForwardPath path;
  Edge back_edge;
  ViolationSide side = ViolationSide::v_side;
  /// Set when the violation was found in the order-reversed graph by a
  /// symmetric check; path and edge are then in the caller's indexing.
  bool mirrored = false;
};

struct BackEdgeOptions {
  /// Also apply the maxima-anchored (mirrored) clauses. Experimental; the
  /// path-restricted property itself is direction sensitive.
  bool symmetric = false;
};

/// True iff seq is a forward path of g: alternating parts joined by edges of
/// g, both index subsequences strictly monotone in the same direction, and at
/// least two vertices. Throws InputError on an empty sequence or an index
/// outside g.
bool is_forward_path(const OrderedBipartiteGraph& g, std::span<const Vertex> seq);

/// Reverses a decreasing forward path so it is traversed in increasing order.
/// Single-edge paths are oriented V first.
ForwardPath normalized(ForwardPath p);

PathRange path_range(const ForwardPath& p);

/// Every edge of g that is a back edge to p. Throws InputError if p is not a
/// forward path of g. Sorted by (u, v).
std::vector<Edge> back_edges(const OrderedBipartiteGraph& g, const ForwardPath& p,
                             BackEdgeOptions options = {});

/// Depth-first enumeration of forward paths with at least min_edges edges,
/// one representative per path (increasing traversal; single edges start at
/// V). Starts are visited V1..Vm then U1..Un, neighbours ascending. The visitor
/// returns false to stop the enumeration early.
template <class Visitor>
void for_each_forward_path(const OrderedBipartiteGraph& g, int min_edges, Visitor&& visit);

std::vector<ForwardPath> enumerate_forward_paths(const OrderedBipartiteGraph& g, int min_edges);

/// Brute-force verifier of the path-restricted property. Returns the first
/// violation in (length, start vertex, lexicographic) order, or nullopt.
/// Exponential in the worst case for non-PRBG inputs.
std::optional<Violation> verify_path_restricted(const OrderedBipartiteGraph& g,
                                                BackEdgeOptions options = {});

inline bool is_prbg(const OrderedBipartiteGraph& g) { return !verify_path_restricted(g); }

/// u -> u_count+1-u, v -> v_count+1-v.
OrderedBipartiteGraph reverse_orders(const OrderedBipartiteGraph& g);
Edge reverse_edge(const OrderedBipartiteGraph& g, const Edge& e);
Vertex reverse_vertex(const OrderedBipartiteGraph& g, const Vertex& x);

// ---------------------------------------------------------------------------

namespace detail {

template <class Visitor>
bool extend_forward(const OrderedBipartiteGraph& g, int min_edges, std::vector<Vertex>& path,
                    int last_u, int last_v, Visitor& visit) {
  const Vertex tip = path.back();
  const int len = static_cast<int>(path.size()) - 1;
  // A single edge is a forward path in both directions; emit it from V only.
  const bool emit = len >= min_edges && !(len == 1 && path.front().part == Part::U);
  if (emit) {
    ForwardPath p{path};
    if (!visit(static_cast<const ForwardPath&>(p))) return false;
  }
  if (tip.part == Part::U) {
    for (int v : g.u_neighbors(tip.index)) {
      if (v <= last_v) continue;
      path.push_back(v_vertex(v));
      const bool go = extend_forward(g, min_edges, path, last_u, v, visit);
      path.pop_back();
      if (!go) return false;
    }
  } else {
    for (int u : g.v_neighbors(tip.index)) {
      if (u <= last_u) continue;
      path.push_back(u_vertex(u));
      const bool go = extend_forward(g, min_edges, path, u, last_v, visit);
      path.pop_back();
      if (!go) return false;
    }
  }
  return true;
}

}  // namespace detail

template <class Visitor>
void for_each_forward_path(const OrderedBipartiteGraph& g, int min_edges, Visitor&& visit) {
  if (min_edges < 1) throw InputError("min_edges must be at least 1");
  std::vector<Vertex> path;
  for (int j = 1; j <= g.v_count(); ++j) {
    path.assign(1, v_vertex(j));
    if (!detail::extend_forward(g, min_edges, path, 0, j, visit)) return;
  }
  for (int i = 1; i <= g.u_count(); ++i) {
    path.assign(1, u_vertex(i));
    if (!detail::extend_forward(g, min_edges, path, i, 0, visit)) return;
  }
}

}  // namespace prbg

#endif  // PRBG_ORDERED_BIPARTITE_HPP
