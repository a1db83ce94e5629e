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

// Geometric graph on a convex point set -> two path-restricted ordered
// bipartite graphs, by cutting along an antipodal pair, splitting crossing
// edges by an angle rule and stripping one extreme edge per V-vertex.

#ifndef PRBG_DECOMPOSITION_HPP
#define PRBG_DECOMPOSITION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prbg/geometry.hpp"
#include "prbg/ordered_bipartite.hpp"
#include "prbg/proximity.hpp"

namespace prbg {

/// A stage of the pipeline broke one of its guarantees. Carries the
/// path-restricted violation when verification failed.
class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(const std::string& what, std::optional<Violation> v = std::nullopt,
                     int graph = 0)
      : std::runtime_error(what), violation(std::move(v)), failing_graph(graph) {}
  std::optional<Violation> violation;
  int failing_graph;  ///< 1 or 2 when a verification failed
};

struct CrossingEdges {
  std::vector<Edge> crossing;          ///< (u, v) in the split's U/V indexing
  std::vector<PointPair> removed;      ///< both endpoints on one side
};

/// Keeps the edges joining the U-part to the V-part. Point indices in `split`
/// refer to g.points. Throws DecompositionError if more than 2n are dropped.
template <class Scalar>
CrossingEdges drop_noncrossing_edges(const GeometricGraph<Scalar>& g, const AntipodalSplit& split) {
  const int n = g.size();
  std::vector<int> u_of(static_cast<std::size_t>(n), 0), v_of(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < split.u_points.size(); ++k)
    u_of[static_cast<std::size_t>(split.u_points[k])] = static_cast<int>(k) + 1;
  for (std::size_t k = 0; k < split.v_points.size(); ++k)
    v_of[static_cast<std::size_t>(split.v_points[k])] = static_cast<int>(k) + 1;
  CrossingEdges out;
  for (const PointPair& e : g.edges) {
    const auto a = static_cast<std::size_t>(e.i), b = static_cast<std::size_t>(e.j);
    if (u_of[a] && v_of[b])
      out.crossing.push_back({u_of[a], v_of[b]});
    else if (u_of[b] && v_of[a])
      out.crossing.push_back({u_of[b], v_of[a]});
    else
      out.removed.push_back(e);
  }
  std::sort(out.crossing.begin(), out.crossing.end());
  if (out.removed.size() > 2 * static_cast<std::size_t>(n))
    throw DecompositionError("more than 2n non-crossing edges: " + std::to_string(out.removed.size()));
  return out;
}

struct E1E2 {
  std::vector<Edge> e1;
  std::vector<Edge> e2;
};

/// For edge (u, v): with v's V-order neighbours right = v-1 and left = v+1,
/// an acute angle u-v-right puts it in E1, else an acute u-v-left in E2.
/// A vertex with one neighbour sends the edge to the other set when that
/// angle is not acute; anything left over goes to E1.
template <class Scalar>
E1E2 partition_e1_e2(const AntipodalSplit& split, const std::vector<Edge>& crossing,
                     const Points2<Scalar>& p, Scalar tau = Scalar(kTolerance)) {
  const int m = static_cast<int>(split.v_points.size());
  auto u_pt = [&](int u) -> Point2<Scalar> { return p.col(split.u_points[static_cast<std::size_t>(u - 1)]); };
  auto v_pt = [&](int v) -> Point2<Scalar> { return p.col(split.v_points[static_cast<std::size_t>(v - 1)]); };
  E1E2 out;
  for (const Edge& e : crossing) {
    const Point2<Scalar> pu = u_pt(e.u), pv = v_pt(e.v);
    const bool has_right = e.v > 1, has_left = e.v < m;
    const bool right_acute = has_right && is_acute<Scalar>(pu, pv, v_pt(e.v - 1), tau);
    const bool left_acute = has_left && is_acute<Scalar>(pu, pv, v_pt(e.v + 1), tau);
    bool first;
    if (right_acute)
      first = true;
    else if (left_acute)
      first = false;
    else if (has_right && !has_left)
      first = false;
    else
      first = true;
    (first ? out.e1 : out.e2).push_back(e);
  }
  return out;
}

enum class StripSide {
  left,   ///< largest u-index
  right,  ///< smallest u-index
};

/// Removes one extreme edge per non-isolated V-vertex; `removed` collects them.
OrderedBipartiteGraph strip_extreme_edges(const OrderedBipartiteGraph& g, StripSide side,
                                          std::vector<Edge>* removed = nullptr);

struct DecompositionResult {
  int point_count = 0;
  long long input_edges = 0;
  /// Antipodal pair, input indices; low is v_1, high is the last U-vertex.
  int antipodal_low = 0;
  int antipodal_high = 0;
  std::vector<int> u_points;  ///< input point index of u_k at position k-1
  std::vector<int> v_points;
  std::vector<PointPair> removed_noncrossing;
  std::vector<Edge> e1;  ///< before stripping, U/V indexing
  std::vector<Edge> e2;  ///< before stripping, U/V indexing (not reversed)
  /// E1 with ascending orders, stripped on the left.
  OrderedBipartiteGraph g1{1, 1, {}};
  /// E2 with both orders reversed, stripped on the (reversed) left, which is
  /// the physical right.
  OrderedBipartiteGraph g2{1, 1, {}};
  std::vector<Edge> removed_extreme_g1;  ///< g1 indexing
  std::vector<Edge> removed_extreme_g2;  ///< g2 (reversed) indexing
  bool verified = false;

  long long total_removed() const {
    return static_cast<long long>(removed_noncrossing.size() + removed_extreme_g1.size() +
                                  removed_extreme_g2.size());
  }
};

struct DecomposeOptions {
  double tau = kTolerance;
  bool verify = true;
  std::optional<AntipodalPair> pair;  ///< canonical-order pair; default balanced choice
};

/// Full pipeline. Throws InputError for a non-convex input, DegenerateGeometry
/// for a point on the antipodal line and DecompositionError when a guarantee
/// fails (with the violation attached).
template <class Scalar>
DecompositionResult decompose(const GeometricGraph<Scalar>& g, DecomposeOptions options = {}) {
  const Scalar tau = Scalar(options.tau);
  const ConvexPointSet<Scalar> c(g.points, tau);
  const int n = c.size();
  const auto& src = c.source_index();

  const AntipodalPair pair = options.pair ? *options.pair
                                          : choose_balanced_pair(antipodal_pairs<Scalar>(c, tau), n);
  AntipodalSplit split = split_at_antipodal<Scalar>(c.points(), pair, tau);
  for (auto* list : {&split.ccw_side, &split.cw_side, &split.u_points, &split.v_points})
    for (int& k : *list) k = src[static_cast<std::size_t>(k)];
  split.low = src[static_cast<std::size_t>(split.low)];
  split.high = src[static_cast<std::size_t>(split.high)];

  DecompositionResult r;
  r.point_count = n;
  r.input_edges = static_cast<long long>(g.edges.size());
  r.antipodal_low = split.low;
  r.antipodal_high = split.high;
  r.u_points = split.u_points;
  r.v_points = split.v_points;

  CrossingEdges ce = drop_noncrossing_edges<Scalar>(g, split);
  r.removed_noncrossing = std::move(ce.removed);
  E1E2 parts = partition_e1_e2<Scalar>(split, ce.crossing, g.points, tau);
  r.e1 = parts.e1;
  r.e2 = parts.e2;

  const int uc = static_cast<int>(split.u_points.size());
  const int vc = static_cast<int>(split.v_points.size());
  r.g1 = strip_extreme_edges(OrderedBipartiteGraph(uc, vc, parts.e1), StripSide::left,
                             &r.removed_extreme_g1);
  r.g2 = strip_extreme_edges(reverse_orders(OrderedBipartiteGraph(uc, vc, parts.e2)), StripSide::left,
                             &r.removed_extreme_g2);

  if (r.total_removed() > 3LL * n)
    throw DecompositionError("removed more than 3n edges: " + std::to_string(r.total_removed()));
  if (options.verify) {
    if (auto v = verify_path_restricted(r.g1))
      throw DecompositionError("G1' is not path-restricted: " + to_string(v->path), v, 1);
    if (auto v = verify_path_restricted(r.g2))
      throw DecompositionError("G2' is not path-restricted: " + to_string(v->path), v, 2);
    r.verified = true;
  }
  return r;
}

namespace detail {

template <class Scalar>
bool segments_cross(const Point2<Scalar>& a, const Point2<Scalar>& b, const Point2<Scalar>& c,
                    const Point2<Scalar>& d, Scalar tau) {
  return orientation<Scalar>(a, b, c, tau) * orientation<Scalar>(a, b, d, tau) < 0 &&
         orientation<Scalar>(c, d, a, tau) * orientation<Scalar>(c, d, b, tau) < 0;
}

}  // namespace detail

/// Every forward path of G1' and G2', drawn as point segments, is free of
/// proper crossings.
template <class Scalar>
bool check_forwardpath_noncrossing(const DecompositionResult& r, const Points2<Scalar>& p,
                                   Scalar tau = Scalar(kTolerance)) {
  const int uc = static_cast<int>(r.u_points.size());
  const int vc = static_cast<int>(r.v_points.size());
  bool ok = true;
  for (int which = 1; which <= 2 && ok; ++which) {
    const OrderedBipartiteGraph& g = which == 1 ? r.g1 : r.g2;
    auto seg = [&](const Edge& e) {
      const int u = which == 1 ? e.u : uc + 1 - e.u;
      const int v = which == 1 ? e.v : vc + 1 - e.v;
      return std::pair<Point2<Scalar>, Point2<Scalar>>(
          p.col(r.u_points[static_cast<std::size_t>(u - 1)]),
          p.col(r.v_points[static_cast<std::size_t>(v - 1)]));
    };
    for_each_forward_path(g, 2, [&](const ForwardPath& path) {
      const auto edges = path.edges();
      for (std::size_t a = 0; a < edges.size() && ok; ++a)
        for (std::size_t b = a + 1; b < edges.size() && ok; ++b) {
          const auto [p1, p2] = seg(edges[a]);
          const auto [q1, q2] = seg(edges[b]);
          if (detail::segments_cross<Scalar>(p1, p2, q1, q2, tau)) ok = false;
        }
      return ok;
    });
  }
  return ok;
}

struct HierarchyFixture {
  std::string name;
  OrderedBipartiteGraph graph;
  bool expected_prbg;
  std::string note;
};

/// Small graphs separating the graph classes, checked only for path restriction.
std::vector<HierarchyFixture> hierarchy_fixtures();

}  // namespace prbg

#endif  // PRBG_DECOMPOSITION_HPP
