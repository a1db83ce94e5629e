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

#include "prbg/prbg_structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace prbg {

// ---------------------------------------------------------------- path trees

bool PathTree::spans(const Vertex& x) const { return x == root || parent.count(x) > 0; }

std::vector<Vertex> PathTree::children(const Vertex& x) const {
  std::vector<Vertex> out;
  for (const Vertex& y : spanned) {
    auto it = parent.find(y);
    if (it != parent.end() && it->second == x) out.push_back(y);
  }
  return out;
}

std::vector<Vertex> PathTree::path_to(const Vertex& x) const {
  if (!spans(x)) throw InputError("vertex " + to_string(x) + " not spanned by the tree");
  std::vector<Vertex> out{x};
  while (out.back() != root) out.push_back(parent.at(out.back()));
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> PathTree::maximal_paths() const {
  std::set<Vertex> internal;
  for (const auto& [child, par] : parent) internal.insert(par);
  std::vector<std::vector<Vertex>> out;
  for (const Vertex& x : spanned)
    if (!internal.count(x)) out.push_back(path_to(x));
  return out;
}

namespace {

std::string describe(const MergeEvent& e) {
  return "forward paths from " + to_string(e.root) + " merge at " + to_string(e.vertex) + " (via " +
         to_string(e.first_parent) + " and " + to_string(e.second_parent) + ")";
}

}  // namespace

MergeError::MergeError(const MergeEvent& e) : std::runtime_error(describe(e)), event(e) {}

std::variant<PathTree, MergeEvent> build_path_tree(const OrderedBipartiteGraph& g, Vertex root,
                                                   Direction direction) {
  if (!g.contains(root)) throw InputError("root " + to_string(root) + " out of range");
  const bool right = direction == Direction::rightward;
  // Sentinels so that the first step on either side is unconstrained.
  const int open = right ? std::numeric_limits<int>::max() : 0;
  auto advances = [right](int next, int last) { return right ? next < last : next > last; };

  struct State {
    Vertex x;
    int last_u, last_v;
  };
  PathTree tree{root, direction, {}, {root}};
  std::vector<State> frontier{
      {root, root.part == Part::U ? root.index : open, root.part == Part::V ? root.index : open}};
  while (!frontier.empty()) {
    std::vector<State> next;
    for (const State& s : frontier) {
      for (int w : g.neighbors(s.x)) {
        const bool to_v = s.x.part == Part::U;
        if (!advances(w, to_v ? s.last_v : s.last_u)) continue;
        const Vertex y{other(s.x.part), w};
        if (tree.spans(y)) {
          const Vertex first = y == root ? root : tree.parent.at(y);
          return MergeEvent{root, y, first, s.x};
        }
        tree.parent.emplace(y, s.x);
        tree.spanned.push_back(y);
        next.push_back(to_v ? State{y, s.last_u, w} : State{y, w, s.last_v});
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

bool check_unique_incidence(const OrderedBipartiteGraph& g, const ForwardPath& p) {
  std::set<Vertex> on(p.vertices.begin(), p.vertices.end());
  std::map<Vertex, int> hits;
  for (const Vertex& x : on)
    for (int w : g.neighbors(x)) {
      const Vertex y{other(x.part), w};
      if (!on.count(y) && ++hits[y] > 1) return false;
    }
  return true;
}

namespace {

long long induced_edge_count(const OrderedBipartiteGraph& g, const std::vector<Vertex>& verts) {
  std::set<Vertex> in(verts.begin(), verts.end());
  long long count = 0;
  for (const Vertex& x : verts)
    if (x.part == Part::U)
      for (int v : g.u_neighbors(x.index)) count += in.count(v_vertex(v));
  return count;
}

}  // namespace

SpanCount tree_span_edge_count(const OrderedBipartiteGraph& g, Vertex root, Direction direction) {
  auto t = build_path_tree(g, root, direction);
  if (auto* m = std::get_if<MergeEvent>(&t)) throw MergeError(*m);
  const auto& tree = std::get<PathTree>(t);
  return {static_cast<int>(tree.spanned.size()),
          static_cast<int>(induced_edge_count(g, tree.spanned))};
}

bool check_disjoint_tl_ranges(const OrderedBipartiteGraph& g, Vertex root) {
  auto t = build_path_tree(g, root, Direction::leftward);
  if (std::holds_alternative<MergeEvent>(t)) return false;
  const auto paths = std::get<PathTree>(t).maximal_paths();

  struct Interval {
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    bool empty() const { return hi < lo; }
    void add(int x) { lo = std::min(lo, x), hi = std::max(hi, x); }
  };
  auto disjoint = [](const Interval& a, const Interval& b) {
    return a.empty() || b.empty() || a.hi < b.lo || b.hi < a.lo;
  };
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const auto& a = paths[i];
      const auto& b = paths[j];
      std::size_t k = 0;
      while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
      Interval au, av, bu, bv;
      for (std::size_t s = k; s < a.size(); ++s) (a[s].part == Part::U ? au : av).add(a[s].index);
      for (std::size_t s = k; s < b.size(); ++s) (b[s].part == Part::U ? bu : bv).add(b[s].index);
      if (!disjoint(au, bu) || !disjoint(av, bv)) return false;
    }
  return true;
}

// ------------------------------------------------------------------- P3 census

namespace {

int sign_pair_type(int v_m, int v_e, int u_e, int u_m) {
  const bool a = v_m > v_e;
  const bool b = u_e > u_m;
  if (a && b) return 1;
  if (!a && !b) return 2;
  return a ? 3 : 4;
}

}  // namespace

int p3_type(const std::array<Vertex, 4>& path) {
  for (std::size_t i = 1; i < 4; ++i)
    if (path[i].part == path[i - 1].part) throw InputError("P3 vertices must alternate parts");
  const Vertex& a = path[1];
  const Vertex& b = path[2];
  const Vertex& um = a.part == Part::U ? a : b;
  const Vertex& vm = a.part == Part::U ? b : a;
  // The pendant next to um is a V-vertex, the one next to vm a U-vertex.
  const Vertex& ve = a.part == Part::U ? path[0] : path[3];
  const Vertex& ue = a.part == Part::U ? path[3] : path[0];
  if (ve.index == vm.index || ue.index == um.index) throw InputError("P3 repeats a vertex");
  return sign_pair_type(vm.index, ve.index, ue.index, um.index);
}

P3Census classify_p3(const OrderedBipartiteGraph& g) {
  P3Census c;
  for (const Edge& e : g.edges())
    for (int ve : g.u_neighbors(e.u)) {
      if (ve == e.v) continue;
      for (int ue : g.v_neighbors(e.v)) {
        if (ue == e.u) continue;
        switch (sign_pair_type(e.v, ve, ue, e.u)) {
          case 1: ++c.type1; break;
          case 2: ++c.type2; break;
          case 3: ++c.type3; break;
          default: ++c.type4; break;
        }
      }
    }
  return c;
}

std::optional<std::vector<Vertex>> find_cycle(const OrderedBipartiteGraph& g) {
  const int n = g.vertex_count();
  auto id = [&](const Vertex& x) { return x.part == Part::U ? x.index - 1 : g.u_count() + x.index - 1; };
  auto vertex_of = [&](int k) { return k < g.u_count() ? u_vertex(k + 1) : v_vertex(k - g.u_count() + 1); };

  std::vector<int> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x)
      x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<std::vector<int>> forest(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    const int a = id(u_vertex(e.u));
    const int b = id(v_vertex(e.v));
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      root[static_cast<std::size_t>(ra)] = rb;
      forest[static_cast<std::size_t>(a)].push_back(b);
      forest[static_cast<std::size_t>(b)].push_back(a);
      continue;
    }
    // The closing edge plus the forest path b -> a is a cycle.
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    q.push(b);
    prev[static_cast<std::size_t>(b)] = b;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : forest[static_cast<std::size_t>(x)])
        if (prev[static_cast<std::size_t>(y)] < 0) {
          prev[static_cast<std::size_t>(y)] = x;
          q.push(y);
        }
    }
    std::vector<Vertex> cycle;
    for (int x = a; x != b; x = prev[static_cast<std::size_t>(x)]) cycle.push_back(vertex_of(x));
    cycle.push_back(vertex_of(b));
    return cycle;
  }
  return std::nullopt;
}

AcyclicityReport assert_acyclic_if_type_missing(const OrderedBipartiteGraph& g) {
  AcyclicityReport r;
  r.prbg = is_prbg(g);
  r.census = classify_p3(g);
  if (!r.prbg || !r.census.has_missing_type()) {
    r.status = AcyclicityReport::Status::precondition_failed;
    return r;
  }
  if (auto c = find_cycle(g)) {
    r.status = AcyclicityReport::Status::cycle;
    r.cycle = std::move(*c);
  }
  return r;
}

// ---------------------------------------------------------------- bounded path

OrderedBipartiteGraph peel_leftmost(const OrderedBipartiteGraph& g, PeelScope scope) {
  std::set<Edge> drop;
  for (int v = 1; v <= g.v_count(); ++v) {
    auto n = g.v_neighbors(v);
    if (!n.empty()) drop.insert({n.back(), v});
  }
  if (scope == PeelScope::all_vertices)
    for (int u = 1; u <= g.u_count(); ++u) {
      auto n = g.u_neighbors(u);
      if (!n.empty()) drop.insert({u, n.back()});
    }
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (!drop.count(e)) keep.push_back(e);
  return with_edges(g, std::move(keep));
}

int longest_forward_path_length(const OrderedBipartiteGraph& g) {
  // Increasing paths only (every forward path has an increasing reading).
  // ends_u[e]: longest path whose last step is v -> u along e; ends_v[e]:
  // last step u -> v. Both depend only on edges with a smaller u + v.
  const auto& edges = g.edges();
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return edges[a].u + edges[a].v < edges[b].u + edges[b].v;
  });
  auto edge_id = [&](int u, int v) {
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), Edge{u, v}) - edges.begin());
  };
  std::vector<int> ends_u(edges.size(), 0), ends_v(edges.size(), 0);
  int best = 0;
  for (std::size_t k : order) {
    const Edge& e = edges[k];
    int into_u = 0;  // best path ending at v having come from some u' < e.u
    for (int u : g.v_neighbors(e.v)) {
      if (u >= e.u) break;
      into_u = std::max(into_u, ends_v[edge_id(u, e.v)]);
    }
    int into_v = 0;
    for (int v : g.u_neighbors(e.u)) {
      if (v >= e.v) break;
      into_v = std::max(into_v, ends_u[edge_id(e.u, v)]);
    }
    ends_u[k] = into_u + 1;
    ends_v[k] = into_v + 1;
    best = std::max({best, ends_u[k], ends_v[k]});
  }
  return best;
}

BoundedPathReport check_bounded_path_bound(const OrderedBipartiteGraph& g) {
  BoundedPathReport r;
  r.k = longest_forward_path_length(g);
  r.vertex_count = g.vertex_count();
  r.edges = static_cast<long long>(g.edge_count());
  const long long n = r.vertex_count;
  r.bound = r.k <= 3 ? 2 * n - 1 : (r.k - 2) * n + 2 * n - 1;

  OrderedBipartiteGraph h = g;
  while (longest_forward_path_length(h) >= 3) {
    const std::size_t before = h.edge_count();
    h = peel_leftmost(h, PeelScope::all_vertices);
    r.peeled_edges += static_cast<long long>(before - h.edge_count());
    ++r.peel_rounds;
  }
  r.remaining_edges = static_cast<long long>(h.edge_count());
  r.remaining_acyclic = !find_cycle(h);
  r.holds = r.edges <= r.bound;
  return r;
}

// -------------------------------------------------------------- crossing bound

CrossingReport crossing_edge_bound(const OrderedBipartiteGraph& g, const Split& s) {
  if (s.u_separator < 0 || s.u_separator > g.u_count() || s.v_separator < 0 ||
      s.v_separator > g.v_count())
    throw InputError("split separator out of range");
  const int a = s.u_separator;
  const int b = s.v_separator;
  CrossingReport r;
  r.premise1 = true;
  for (int u = a + 1; u <= g.u_count(); ++u) {
    auto n = g.u_neighbors(u);
    if (n.empty() || n.back() <= b) r.premise1 = false;
  }
  r.premise2 = true;
  for (int v = b + 1; v <= g.v_count(); ++v) {
    auto n = g.v_neighbors(v);
    if (n.empty() || n.back() <= a) r.premise2 = false;
  }
  for (const Edge& e : g.edges()) {
    if (e.u > a && e.v <= b) ++r.count1;
    if (e.v > b && e.u <= a) ++r.count2;
  }
  r.bound1 = (g.u_count() - a) + b;
  r.bound2 = (g.v_count() - b) + a;
  return r;
}

// ----------------------------------------------------------------- S1/S2 split

VertexSet::VertexSet(const OrderedBipartiteGraph& g, bool full)
    : u_(static_cast<std::size_t>(g.u_count()) + 1, full ? 1 : 0),
      v_(static_cast<std::size_t>(g.v_count()) + 1, full ? 1 : 0),
      size_(full ? g.vertex_count() : 0) {
  u_[0] = v_[0] = 0;
}

bool VertexSet::contains(const Vertex& x) const {
  const auto& f = x.part == Part::U ? u_ : v_;
  return x.index >= 1 && static_cast<std::size_t>(x.index) < f.size() &&
         f[static_cast<std::size_t>(x.index)];
}

void VertexSet::insert(const Vertex& x) {
  auto& f = x.part == Part::U ? u_ : v_;
  if (x.index < 1 || static_cast<std::size_t>(x.index) >= f.size())
    throw InputError("vertex " + to_string(x) + " out of range");
  char& slot = f[static_cast<std::size_t>(x.index)];
  if (!slot) ++size_;
  slot = 1;
}

void VertexSet::erase(const Vertex& x) {
  if (!contains(x)) return;
  auto& f = x.part == Part::U ? u_ : v_;
  f[static_cast<std::size_t>(x.index)] = 0;
  --size_;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::size_t i = 1; i < u_.size(); ++i)
    if (u_[i]) out.push_back(u_vertex(static_cast<int>(i)));
  for (std::size_t j = 1; j < v_.size(); ++j)
    if (v_[j]) out.push_back(v_vertex(static_cast<int>(j)));
  return out;
}

namespace {

int induced_degree(const OrderedBipartiteGraph& g, const VertexSet& set, const Vertex& x) {
  int d = 0;
  for (int w : g.neighbors(x)) d += set.contains({other(x.part), w});
  return d;
}

}  // namespace

S1S2Partition partition_s1_s2(const OrderedBipartiteGraph& g, const VertexSet& active) {
  S1S2Partition p;
  VertexSet s1(g);
  std::vector<Vertex> last_added;
  const int n = active.size();
  for (int v = g.v_count(); v >= 1 && 2 * s1.size() < n; --v) {
    const Vertex x = v_vertex(v);
    if (!active.contains(x)) continue;
    last_added.assign(1, x);
    s1.insert(x);
    for (int u : g.v_neighbors(v)) {
      const Vertex y = u_vertex(u);
      if (active.contains(y) && !s1.contains(y)) {
        s1.insert(y);
        last_added.push_back(y);
      }
    }
    p.last_scanned_v = v;
  }
  for (const Vertex& x : last_added)
    if (induced_degree(g, s1, x) == 1) p.terminals.push_back(x);
  std::sort(p.terminals.begin(), p.terminals.end());
  p.s1 = s1.members();
  for (const Vertex& x : active.members())
    if (!s1.contains(x)) p.s2.push_back(x);
  return p;
}

S1S2Partition partition_s1_s2(const OrderedBipartiteGraph& g) {
  return partition_s1_s2(g, VertexSet(g, true));
}

bool partition_properties_hold(const OrderedBipartiteGraph& g, const VertexSet& active,
                               const S1S2Partition& p) {
  VertexSet s1(g);
  for (const Vertex& x : p.s1) {
    if (!active.contains(x)) return false;
    s1.insert(x);
  }
  if (static_cast<int>(p.s1.size() + p.s2.size()) != active.size()) return false;
  for (const Edge& e : g.edges()) {
    const Vertex a = u_vertex(e.u), b = v_vertex(e.v);
    if (!active.contains(a) || !active.contains(b)) continue;
    const bool ia = s1.contains(a), ib = s1.contains(b);
    // (1): the only S1-S2 edges leave U cap S1 toward V right of the separator.
    if (ia != ib && !(ia && e.v < p.last_scanned_v)) return false;
  }
  for (const Vertex& x : p.s1)
    if (induced_degree(g, active, x) > 0 && induced_degree(g, s1, x) == 0) return false;
  for (const Vertex& t : p.terminals)
    if (!s1.contains(t) || induced_degree(g, s1, t) != 1) return false;
  return true;
}

// ------------------------------------------------------------ edge certificate

namespace {

struct NodeOutcome {
  CertificateNode node;
  std::vector<Vertex> s1_rest;  // S1 minus terminals
  std::vector<Vertex> s2;
};

// One recursion step on the active set; shared by certification and validation.
NodeOutcome certify_node(const OrderedBipartiteGraph& g, const std::vector<Vertex>& entry, int depth) {
  NodeOutcome out;
  CertificateNode& node = out.node;
  node.vertices = entry;
  node.depth = depth;

  VertexSet active(g);
  for (const Vertex& x : entry) active.insert(x);
  long long edges = 0;
  for (const Vertex& x : entry)
    if (x.part == Part::U) edges += induced_degree(g, active, x);
  if (entry.size() <= 2 || edges == 0) {
    node.leaf = true;
    node.leaf_edges = edges;
    return out;
  }
  for (const Vertex& x : entry)
    if (induced_degree(g, active, x) == 0) {
      active.erase(x);
      ++node.isolated;
    }

  const S1S2Partition part = partition_s1_s2(g, active);
  VertexSet s1(g);
  for (const Vertex& x : part.s1) s1.insert(x);
  VertexSet terminal(g);
  for (const Vertex& x : part.terminals) terminal.insert(x);

  int u_in_s1 = 0, v_below = 0;
  for (const Vertex& x : part.s1) u_in_s1 += x.part == Part::U;
  for (const Vertex& x : part.s2) v_below += x.part == Part::V && x.index < part.last_scanned_v;
  node.crossing_bound = u_in_s1 + v_below;
  node.terminals = static_cast<int>(part.terminals.size());

  for (const Vertex& x : active.members()) {
    if (x.part != Part::U) continue;
    for (int v : g.u_neighbors(x.index)) {
      const Vertex y = v_vertex(v);
      if (!active.contains(y)) continue;
      const bool ia = s1.contains(x), ib = s1.contains(y);
      if (ia != ib)
        ++node.crossing;
      else if (ia && (terminal.contains(x) || terminal.contains(y)))
        ++node.terminal_edges;
    }
  }
  for (const Vertex& x : part.s1)
    if (!terminal.contains(x)) out.s1_rest.push_back(x);
  out.s2 = part.s2;

  const std::size_t limit = (static_cast<std::size_t>(active.size()) + 1) / 2;
  if (out.s1_rest.size() > limit || out.s2.size() > limit) {
    std::ostringstream os;
    os << "certificate recursion does not halve: n=" << active.size() << " |S1|=" << out.s1_rest.size()
       << " |S2|=" << out.s2.size();
    throw std::logic_error(os.str());
  }
  return out;
}

int ceil_log2(long long n) {
  int k = 0;
  while ((1LL << k) < n) ++k;
  return k;
}

}  // namespace

BoundCertificate certify_edge_bound(const OrderedBipartiteGraph& g, CertifyOptions options) {
  BoundCertificate cert;
  cert.vertex_count = g.vertex_count();
  cert.edges = static_cast<long long>(g.edge_count());
  if (options.verify_input) cert.prbg = is_prbg(g);

  struct Pending {
    std::vector<Vertex> vertices;
    int depth;
    int parent;
    bool s1_side;
  };
  std::vector<Pending> stack{{VertexSet(g, true).members(), 0, -1, false}};
  while (!stack.empty()) {
    Pending job = std::move(stack.back());
    stack.pop_back();
    NodeOutcome o = certify_node(g, job.vertices, job.depth);
    const int id = static_cast<int>(cert.nodes.size());
    if (job.parent >= 0)
      (job.s1_side ? cert.nodes[static_cast<std::size_t>(job.parent)].s1_child
                   : cert.nodes[static_cast<std::size_t>(job.parent)].s2_child) = id;
    cert.depth = std::max(cert.depth, job.depth);
    const CertificateNode& node = o.node;
    cert.accounted_edges += node.crossing + node.terminal_edges + node.leaf_edges;
    cert.certified_bound += node.crossing_bound + node.terminal_edges + node.leaf_edges;
    const bool leaf = node.leaf;
    cert.nodes.push_back(std::move(o.node));
    if (!leaf) {
      // S2 pushed first so the S1 subtree is numbered right after its parent.
      stack.push_back({std::move(o.s2), job.depth + 1, id, false});
      stack.push_back({std::move(o.s1_rest), job.depth + 1, id, true});
    }
  }
  const double n = cert.vertex_count;
  cert.nlogn_bound = n * std::log2(n) + cert.constant * n;
  cert.holds = cert.accounted_edges == cert.edges && cert.edges <= cert.certified_bound &&
               static_cast<double>(cert.certified_bound) <= cert.nlogn_bound;
  return cert;
}

std::vector<std::string> validate_certificate(const OrderedBipartiteGraph& g,
                                              const BoundCertificate& cert) {
  std::vector<std::string> problems;
  auto fail = [&](std::size_t id, const std::string& what) {
    problems.push_back("node " + std::to_string(id) + ": " + what);
  };
  if (cert.nodes.empty()) return {"certificate has no nodes"};
  if (cert.vertex_count != g.vertex_count()) problems.push_back("vertex count mismatch");
  if (cert.edges != static_cast<long long>(g.edge_count())) problems.push_back("edge count mismatch");
  if (cert.nodes[0].vertices != VertexSet(g, true).members()) fail(0, "root does not hold every vertex");

  long long accounted = 0, certified = 0;
  int depth = 0;
  std::vector<int> seen(cert.nodes.size(), 0);
  seen[0] = 1;
  for (std::size_t id = 0; id < cert.nodes.size(); ++id) {
    const CertificateNode& node = cert.nodes[id];
    NodeOutcome o;
    try {
      o = certify_node(g, node.vertices, node.depth);
    } catch (const std::exception& e) {
      fail(id, e.what());
      continue;
    }
    const CertificateNode& r = o.node;
    if (r.leaf != node.leaf || r.leaf_edges != node.leaf_edges || r.isolated != node.isolated ||
        r.crossing != node.crossing || r.crossing_bound != node.crossing_bound ||
        r.terminals != node.terminals || r.terminal_edges != node.terminal_edges)
      fail(id, "recomputed counts differ");
    if (!node.leaf && node.crossing > node.n() - 1) fail(id, "crossing count exceeds n-1");
    auto check_child = [&](int child, const std::vector<Vertex>& expect, const char* name) {
      if (node.leaf) {
        if (child != -1) fail(id, std::string("leaf has ") + name + " child");
        return;
      }
      if (child <= static_cast<int>(id) || child >= static_cast<int>(cert.nodes.size())) {
        fail(id, std::string("bad ") + name + " child index");
        return;
      }
      ++seen[static_cast<std::size_t>(child)];
      const CertificateNode& c = cert.nodes[static_cast<std::size_t>(child)];
      if (c.vertices != expect) fail(id, std::string(name) + " child vertex set differs");
      if (c.depth != node.depth + 1) fail(id, std::string(name) + " child depth differs");
    };
    check_child(node.s1_child, o.s1_rest, "S1");
    check_child(node.s2_child, o.s2, "S2");
    accounted += node.crossing + node.terminal_edges + node.leaf_edges;
    certified += node.crossing_bound + node.terminal_edges + node.leaf_edges;
    depth = std::max(depth, node.depth);
  }
  for (std::size_t id = 0; id < seen.size(); ++id)
    if (seen[id] != 1) fail(id, "not referenced exactly once");
  if (accounted != cert.accounted_edges) problems.push_back("accounted edge total differs");
  if (accounted != static_cast<long long>(g.edge_count()))
    problems.push_back("crossing + terminal + leaf edges do not sum to |E|");
  if (certified != cert.certified_bound) problems.push_back("certified bound total differs");
  if (depth != cert.depth) problems.push_back("recorded depth differs");
  if (depth > ceil_log2(g.vertex_count()) + 1) problems.push_back("recursion deeper than ceil(log2 n) + 1");
  return problems;
}

// ----------------------------------------------------------------- strictness

bool is_strictly_path_restricted(const OrderedBipartiteGraph& g) {
  for (int r = 1; r <= g.v_count(); ++r) {
    auto t = build_path_tree(g, v_vertex(r), Direction::rightward);
    if (std::holds_alternative<MergeEvent>(t)) return false;
    const PathTree& tree = std::get<PathTree>(t);

    // For each spanned V-vertex: parent u, plus u's smallest and largest
    // neighbours outside the span.
    struct Entry {
      int v, u, min_out, max_out;
    };
    std::vector<Entry> entries;
    for (const Vertex& x : tree.spanned) {
      if (x.part != Part::V || x == tree.root) continue;
      const int u = tree.parent.at(x).index;
      int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
      for (int w : g.u_neighbors(u))
        if (!tree.spans(v_vertex(w))) lo = std::min(lo, w), hi = std::max(hi, w);
      entries.push_back({x.index, u, lo, hi});
    }
    for (const Entry& a : entries)
      for (const Entry& b : entries)
        if (a.v < b.v && a.u < b.u && a.min_out < b.max_out) return false;
  }
  return true;
}

long long spbg_tl_remark_violations(const OrderedBipartiteGraph& g) {
  long long count = 0;
  for (int r = 1; r <= g.u_count(); ++r) {
    auto t = build_path_tree(g, u_vertex(r), Direction::leftward);
    if (std::holds_alternative<MergeEvent>(t)) continue;
    const PathTree& tree = std::get<PathTree>(t);
    const long long induced = induced_edge_count(g, tree.spanned);
    count += induced - static_cast<long long>(tree.spanned.size() - 1);
  }
  return count;
}

}  // namespace prbg
