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

#include "prbg/ordered_bipartite.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace prbg {

std::string to_string(const Vertex& x) {
  return (x.part == Part::U ? "u" : "v") + std::to_string(x.index);
}

std::string to_string(const ForwardPath& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) s += ",";
    s += to_string(p.vertices[i]);
  }
  return s + "]";
}

namespace {

void build_csr(int count, const std::vector<std::pair<int, int>>& pairs, std::vector<int>& offsets,
               std::vector<int>& adj) {
  offsets.assign(static_cast<std::size_t>(count) + 2, 0);
  for (auto [a, b] : pairs) ++offsets[static_cast<std::size_t>(a) + 1];
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  adj.assign(pairs.size(), 0);
  std::vector<int> fill(offsets.begin(), offsets.end());
  for (auto [a, b] : pairs) adj[static_cast<std::size_t>(fill[static_cast<std::size_t>(a)]++)] = b;
  for (int a = 0; a <= count; ++a)
    std::sort(adj.begin() + offsets[static_cast<std::size_t>(a)],
              adj.begin() + offsets[static_cast<std::size_t>(a) + 1]);
}

}  // namespace

OrderedBipartiteGraph::OrderedBipartiteGraph(int u_count, int v_count, std::vector<Edge> edges)
    : u_count_(u_count), v_count_(v_count), edges_(std::move(edges)) {
  if (u_count_ < 1 || v_count_ < 1)
    throw InputError("ordered bipartite graph needs u_count >= 1 and v_count >= 1");
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.u > u_count_ || e.v < 1 || e.v > v_count_) {
      std::ostringstream os;
      os << "edge (" << e.u << "," << e.v << ") out of range for " << u_count_ << "x" << v_count_;
      throw InputError(os.str());
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    std::ostringstream os;
    os << "duplicate edge (" << dup->u << "," << dup->v << ")";
    throw InputError(os.str());
  }
  std::vector<std::pair<int, int>> by_u, by_v;
  by_u.reserve(edges_.size());
  by_v.reserve(edges_.size());
  for (const Edge& e : edges_) {
    by_u.emplace_back(e.u, e.v);
    by_v.emplace_back(e.v, e.u);
  }
  build_csr(u_count_, by_u, u_offsets_, u_adj_);
  build_csr(v_count_, by_v, v_offsets_, v_adj_);
}

bool OrderedBipartiteGraph::has_edge(int u, int v) const {
  if (u < 1 || u > u_count_ || v < 1 || v > v_count_) return false;
  auto n = u_neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

bool OrderedBipartiteGraph::contains(const Vertex& x) const {
  const int count = x.part == Part::U ? u_count_ : v_count_;
  return x.index >= 1 && x.index <= count;
}

std::span<const int> OrderedBipartiteGraph::u_neighbors(int u) const {
  const auto b = static_cast<std::size_t>(u_offsets_[static_cast<std::size_t>(u)]);
  const auto e = static_cast<std::size_t>(u_offsets_[static_cast<std::size_t>(u) + 1]);
  return {u_adj_.data() + b, e - b};
}

std::span<const int> OrderedBipartiteGraph::v_neighbors(int v) const {
  const auto b = static_cast<std::size_t>(v_offsets_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(v_offsets_[static_cast<std::size_t>(v) + 1]);
  return {v_adj_.data() + b, e - b};
}

std::span<const int> OrderedBipartiteGraph::neighbors(const Vertex& x) const {
  return x.part == Part::U ? u_neighbors(x.index) : v_neighbors(x.index);
}

OrderedBipartiteGraph with_edges(const OrderedBipartiteGraph& g, std::vector<Edge> edges) {
  return OrderedBipartiteGraph(g.u_count(), g.v_count(), std::move(edges));
}

std::vector<Edge> ForwardPath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const Vertex& a = vertices[i];
    const Vertex& b = vertices[i + 1];
    out.push_back(a.part == Part::U ? Edge{a.index, b.index} : Edge{b.index, a.index});
  }
  return out;
}

bool is_forward_path(const OrderedBipartiteGraph& g, std::span<const Vertex> seq) {
  if (seq.empty()) throw InputError("empty vertex sequence");
  for (const Vertex& x : seq)
    if (!g.contains(x)) throw InputError("vertex " + to_string(x) + " out of range");
  if (seq.size() < 2) return false;

  int u_dir = 0, v_dir = 0;  // +1 increasing, -1 decreasing, 0 unknown
  int last_u = 0, last_v = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex& x = seq[i];
    if (i > 0) {
      const Vertex& prev = seq[i - 1];
      if (prev.part == x.part) return false;
      const Edge e = x.part == Part::U ? Edge{x.index, prev.index} : Edge{prev.index, x.index};
      if (!g.has_edge(e)) return false;
    }
    int& last = x.part == Part::U ? last_u : last_v;
    int& dir = x.part == Part::U ? u_dir : v_dir;
    if (last != 0) {
      if (x.index == last) return false;
      const int d = x.index > last ? 1 : -1;
      if (dir != 0 && d != dir) return false;
      dir = d;
    }
    last = x.index;
  }
  return u_dir == 0 || v_dir == 0 || u_dir == v_dir;
}

ForwardPath normalized(ForwardPath p) {
  if (p.vertices.size() < 2) return p;
  bool reverse = false;
  if (p.vertices.size() == 2) {
    reverse = p.vertices.front().part == Part::U;
  } else {
    // positions 0 and 2 share a part
    reverse = p.vertices[2].index < p.vertices[0].index;
  }
  if (reverse) std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

PathRange path_range(const ForwardPath& p) {
  PathRange r{std::numeric_limits<int>::max(), 0, std::numeric_limits<int>::max(), 0};
  for (const Vertex& x : p.vertices) {
    if (x.part == Part::U) {
      r.u_min = std::min(r.u_min, x.index);
      r.u_max = std::max(r.u_max, x.index);
    } else {
      r.v_min = std::min(r.v_min, x.index);
      r.v_max = std::max(r.v_max, x.index);
    }
  }
  if (r.u_max == 0) r.u_min = 0;
  if (r.v_max == 0) r.v_min = 0;
  return r;
}

namespace {

struct ClauseHit {
  Edge edge;
  ViolationSide side;
};

// Minima-anchored clauses on an increasing path.
std::vector<ClauseHit> minima_clauses(const OrderedBipartiteGraph& g, const ForwardPath& p) {
  std::vector<ClauseHit> out;
  const PathRange r = path_range(p);
  int internal_u = std::numeric_limits<int>::max();
  int internal_v = std::numeric_limits<int>::max();
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    const Vertex& x = p.vertices[i];
    if (x.part == Part::U)
      internal_u = std::min(internal_u, x.index);
    else
      internal_v = std::min(internal_v, x.index);
  }
  const auto own = p.edges();
  auto on_path = [&](const Edge& e) { return std::find(own.begin(), own.end(), e) != own.end(); };

  if (internal_u != std::numeric_limits<int>::max() && r.v_max > 0) {
    for (int u : g.v_neighbors(r.v_min)) {
      const Edge e{u, r.v_min};
      if (u >= r.u_min && u <= r.u_max && u > internal_u && !on_path(e))
        out.push_back({e, ViolationSide::v_side});
    }
  }
  if (internal_v != std::numeric_limits<int>::max() && r.u_max > 0) {
    for (int v : g.u_neighbors(r.u_min)) {
      const Edge e{r.u_min, v};
      if (v >= r.v_min && v <= r.v_max && v > internal_v && !on_path(e))
        out.push_back({e, ViolationSide::u_side});
    }
  }
  std::sort(out.begin(), out.end(), [](const ClauseHit& a, const ClauseHit& b) { return a.edge < b.edge; });
  return out;
}

ForwardPath reverse_path(const OrderedBipartiteGraph& g, const ForwardPath& p) {
  ForwardPath q;
  for (const Vertex& x : p.vertices) q.vertices.push_back(reverse_vertex(g, x));
  return q;
}

}  // namespace

std::vector<Edge> back_edges(const OrderedBipartiteGraph& g, const ForwardPath& p,
                             BackEdgeOptions options) {
  if (!is_forward_path(g, p.vertices)) throw InputError("not a forward path: " + to_string(p));
  const ForwardPath q = normalized(p);
  std::vector<Edge> out;
  for (const ClauseHit& h : minima_clauses(g, q)) out.push_back(h.edge);
  if (options.symmetric) {
    const OrderedBipartiteGraph rg = reverse_orders(g);
    for (const ClauseHit& h : minima_clauses(rg, normalized(reverse_path(g, q))))
      out.push_back(reverse_edge(g, h.edge));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ForwardPath> enumerate_forward_paths(const OrderedBipartiteGraph& g, int min_edges) {
  std::vector<ForwardPath> out;
  for_each_forward_path(g, min_edges, [&](const ForwardPath& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

namespace {

// Single DFS pass that keeps the shortest violating path; for equal lengths
// the first one in enumeration order wins, so deeper exploration is pruned
// once a violation of length L is known. A first pass looks only for
// length 3, the shortest possible. The full pass cuts branches that cannot
// reach a violation, using the largest indices reachable by extension.
class ViolationSearch {
 public:
  explicit ViolationSearch(const OrderedBipartiteGraph& g) : g_(g) {}

  std::optional<ForwardPath> run() {
    max_len_ = 3;
    sweep();
    if (best_) return best_;
    max_len_ = std::numeric_limits<int>::max();
    build_reach();
    pruning_ = true;
    sweep();
    return best_;
  }

 private:
  struct Reach {
    int u = 0;
    int v = 0;
  };

  static Reach join(Reach a, Reach b) { return {std::max(a.u, b.u), std::max(a.v, b.v)}; }

  static std::size_t position(std::span<const int> n, int x) {
    return static_cast<std::size_t>(std::lower_bound(n.begin(), n.end(), x) - n.begin());
  }

  // from_u_[u][k]: largest indices reachable from state (u, N(u)[k'], tip V)
  // over k' >= k; from_v_ symmetric. Extensions strictly increase u + v, so
  // one pass in decreasing u + v fills both.
  void build_reach() {
    from_u_.assign(static_cast<std::size_t>(g_.u_count()) + 1, {});
    from_v_.assign(static_cast<std::size_t>(g_.v_count()) + 1, {});
    for (int u = 1; u <= g_.u_count(); ++u) from_u_[static_cast<std::size_t>(u)].resize(g_.u_neighbors(u).size() + 1);
    for (int v = 1; v <= g_.v_count(); ++v) from_v_[static_cast<std::size_t>(v)].resize(g_.v_neighbors(v).size() + 1);
    std::vector<Edge> order = g_.edges();
    std::sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) { return a.u + a.v > b.u + b.v; });
    for (const Edge& e : order) {
      auto& su = from_u_[static_cast<std::size_t>(e.u)];
      auto& sv = from_v_[static_cast<std::size_t>(e.v)];
      const std::size_t ku = position(g_.u_neighbors(e.u), e.v);
      const std::size_t kv = position(g_.v_neighbors(e.v), e.u);
      const Reach tip_u = join({e.u, e.v}, su[ku + 1]);
      const Reach tip_v = join({e.u, e.v}, sv[kv + 1]);
      su[ku] = join(tip_v, su[ku + 1]);
      sv[kv] = join(tip_u, sv[kv + 1]);
    }
  }

  Reach reach(int last_u, int last_v) const {
    const Reach here{last_u, last_v};
    if (path_.back().part == Part::U)
      return join(here, from_u_[static_cast<std::size_t>(last_u)][position(g_.u_neighbors(last_u), last_v) + 1]);
    return join(here, from_v_[static_cast<std::size_t>(last_v)][position(g_.v_neighbors(last_v), last_u) + 1]);
  }

  // Smallest neighbour of `anchor` above `lo`, or 0.
  int next_neighbor(const Vertex& anchor, int lo) const {
    auto n = g_.neighbors(anchor);
    auto it = std::upper_bound(n.begin(), n.end(), lo);
    return it == n.end() ? 0 : *it;
  }

  // Some extension of the current path (length >= 2) violates.
  bool violation_reachable(int last_u, int last_v) const {
    const int t1 = next_neighbor(path_[0], path_[1].index);
    const int t2 = next_neighbor(path_[1], path_[2].index);
    if (!t1 && !t2) return false;
    const Reach r = reach(last_u, last_v);
    const bool starts_in_u = path_[0].part == Part::U;
    const int max_p1_part = starts_in_u ? r.v : r.u;
    const int max_p0_part = starts_in_u ? r.u : r.v;
    return (t1 && max_p1_part >= t1) || (t2 && max_p0_part >= t2);
  }

  void sweep() {
    for (int j = 1; j <= g_.v_count(); ++j) {
      path_.assign(1, v_vertex(j));
      dfs(0, j);
    }
    for (int i = 1; i <= g_.u_count(); ++i) {
      path_.assign(1, u_vertex(i));
      dfs(i, 0);
    }
  }

  // A neighbour of `anchor` in the open-closed interval (lo, hi].
  bool has_neighbor_in(const Vertex& anchor, int lo, int hi) const {
    if (hi <= lo) return false;
    auto n = g_.neighbors(anchor);
    auto it = std::upper_bound(n.begin(), n.end(), lo);
    return it != n.end() && *it <= hi;
  }

  bool violates() const {
    const int len = static_cast<int>(path_.size()) - 1;
    const int last = path_.back().index;
    const int second_last = path_[path_.size() - 2].index;
    const int max_odd = len % 2 == 1 ? last : second_last;
    const int max_even = len % 2 == 0 ? last : second_last;
    return has_neighbor_in(path_[0], path_[1].index, max_odd) ||
           has_neighbor_in(path_[1], path_[2].index, max_even);
  }

  void dfs(int last_u, int last_v) {
    const int len = static_cast<int>(path_.size()) - 1;
    if (best_ && (best_len_ == 3 || len >= best_len_)) return;  // 3 is the minimum
    if (len >= 3 && violates()) {
      best_ = ForwardPath{path_};
      best_len_ = len;
      return;
    }
    if (len >= max_len_ || (best_ && len + 1 >= best_len_)) return;
    if (pruning_ && len >= 2 && !violation_reachable(last_u, last_v)) return;
    const Vertex tip = path_.back();
    if (tip.part == Part::U) {
      for (int v : g_.u_neighbors(tip.index)) {
        if (v <= last_v) continue;
        path_.push_back(v_vertex(v));
        dfs(last_u, v);
        path_.pop_back();
      }
    } else {
      for (int u : g_.v_neighbors(tip.index)) {
        if (u <= last_u) continue;
        path_.push_back(u_vertex(u));
        dfs(u, last_v);
        path_.pop_back();
      }
    }
  }

  const OrderedBipartiteGraph& g_;
  std::vector<Vertex> path_;
  std::vector<std::vector<Reach>> from_u_, from_v_;
  int max_len_ = 3;
  bool pruning_ = false;
  std::optional<ForwardPath> best_;
  int best_len_ = std::numeric_limits<int>::max();
};

std::optional<Violation> first_minima_violation(const OrderedBipartiteGraph& g) {
  auto path = ViolationSearch(g).run();
  if (!path) return std::nullopt;
  const auto hits = minima_clauses(g, *path);
  if (hits.empty()) throw std::logic_error("violation search and back-edge predicate disagree");
  return Violation{*path, hits.front().edge, hits.front().side, false};
}

}  // namespace

std::optional<Violation> verify_path_restricted(const OrderedBipartiteGraph& g,
                                                BackEdgeOptions options) {
  if (auto v = first_minima_violation(g)) return v;
  if (!options.symmetric) return std::nullopt;
  if (auto v = first_minima_violation(reverse_orders(g))) {
    Violation back{reverse_path(g, v->path), reverse_edge(g, v->back_edge), v->side, true};
    return back;
  }
  return std::nullopt;
}

Edge reverse_edge(const OrderedBipartiteGraph& g, const Edge& e) {
  return {g.u_count() + 1 - e.u, g.v_count() + 1 - e.v};
}

Vertex reverse_vertex(const OrderedBipartiteGraph& g, const Vertex& x) {
  const int count = x.part == Part::U ? g.u_count() : g.v_count();
  return {x.part, count + 1 - x.index};
}

OrderedBipartiteGraph reverse_orders(const OrderedBipartiteGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back(reverse_edge(g, e));
  return OrderedBipartiteGraph(g.u_count(), g.v_count(), std::move(edges));
}

}  // namespace prbg
