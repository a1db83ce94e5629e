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

// Structural checks on path-restricted ordered bipartite graphs: forward-path
// trees, incidence and range checks, P3 census, bounded-path peeling, the
// crossing bound and the divide-and-conquer edge bound certificate.

#ifndef PRBG_PRBG_STRUCTURE_HPP
#define PRBG_PRBG_STRUCTURE_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "prbg/ordered_bipartite.hpp"

namespace prbg {

enum class Direction {
  rightward,  ///< toward lower order: both index subsequences decrease
  leftward,   ///< toward higher order
};

/// All forward paths from `root` in one direction, merged into a tree.
struct PathTree {
  Vertex root;
  Direction direction = Direction::rightward;
  std::map<Vertex, Vertex> parent;  ///< every spanned vertex except the root
  std::vector<Vertex> spanned;      ///< breadth-first order, root first

  bool spans(const Vertex& x) const;
  std::vector<Vertex> children(const Vertex& x) const;
  /// Root-to-x vertex sequence.
  std::vector<Vertex> path_to(const Vertex& x) const;
  /// Root-to-leaf paths, leaves in breadth-first order.
  std::vector<std::vector<Vertex>> maximal_paths() const;
};

/// Two distinct forward paths from the root reach `vertex`.
struct MergeEvent {
  Vertex root;
  Vertex vertex;
  Vertex first_parent;
  Vertex second_parent;
};

class MergeError : public std::runtime_error {
 public:
  explicit MergeError(const MergeEvent& e);
  MergeEvent event;
};

std::variant<PathTree, MergeEvent> build_path_tree(const OrderedBipartiteGraph& g, Vertex root,
                                                   Direction direction);

/// Every vertex off p has at most one edge into p's vertices.
bool check_unique_incidence(const OrderedBipartiteGraph& g, const ForwardPath& p);

struct SpanCount {
  int spanned = 0;
  int induced_edges = 0;
  friend bool operator==(const SpanCount&, const SpanCount&) = default;
};

/// Size of span(T(root)) and the number of g-edges inside it. Throws
/// MergeError when the paths do not form a tree.
SpanCount tree_span_edge_count(const OrderedBipartiteGraph& g, Vertex root,
                               Direction direction = Direction::rightward);

/// Maximal paths of T_l(root) have pairwise disjoint ranges once their shared
/// prefix is removed. False on a merge.
bool check_disjoint_tl_ranges(const OrderedBipartiteGraph& g, Vertex root);

/// Counts of 3-edge paths by the sign pair (sign(v_m - v_e), sign(u_e - u_m))
/// where (u_m, v_m) is the middle edge and (u_m, v_e), (u_e, v_m) the pendants.
struct P3Census {
  long long type1 = 0;  ///< (+,+)
  long long type2 = 0;  ///< (-,-)
  long long type3 = 0;  ///< (+,-)
  long long type4 = 0;  ///< (-,+)

  long long total() const { return type1 + type2 + type3 + type4; }
  std::array<long long, 4> as_array() const { return {type1, type2, type3, type4}; }
  bool has_missing_type() const { return type1 == 0 || type2 == 0 || type3 == 0 || type4 == 0; }
};

P3Census classify_p3(const OrderedBipartiteGraph& g);

/// Type (1..4) of a 3-edge path given as its four vertices in order.
int p3_type(const std::array<Vertex, 4>& path);

/// A cycle as a closed vertex walk (first vertex not repeated at the end).
std::optional<std::vector<Vertex>> find_cycle(const OrderedBipartiteGraph& g);

struct AcyclicityReport {
  enum class Status { ok, cycle, precondition_failed };
  Status status = Status::ok;
  std::vector<Vertex> cycle;  ///< witness when status == cycle
  bool prbg = false;
  P3Census census;
};

/// Acyclicity check. Preconditions (PRBG and some P3 type absent) are
/// reported separately from cycle detection.
AcyclicityReport assert_acyclic_if_type_missing(const OrderedBipartiteGraph& g);

enum class PeelScope {
  v_vertices,    ///< each V-vertex drops its largest-u edge
  all_vertices,  ///< additionally each U-vertex drops its largest-v edge (simultaneous)
};

OrderedBipartiteGraph peel_leftmost(const OrderedBipartiteGraph& g,
                                    PeelScope scope = PeelScope::v_vertices);

/// Edge length of the longest forward path; 0 for an edgeless graph.
int longest_forward_path_length(const OrderedBipartiteGraph& g);

struct BoundedPathReport {
  int k = 0;            ///< longest forward path length
  int vertex_count = 0;
  long long edges = 0;
  long long bound = 0;  ///< 2n-1 for k <= 3, (k-2)n + 2n - 1 beyond
  int peel_rounds = 0;  ///< all-vertex peels until no 3-edge forward path remains
  long long peeled_edges = 0;
  long long remaining_edges = 0;
  bool remaining_acyclic = false;
  bool holds = false;
};

BoundedPathReport check_bounded_path_bound(const OrderedBipartiteGraph& g);

/// Separator between orders: U1 = {u > u_separator}, U2 = {u <= u_separator},
/// V1/V2 likewise. U1 and V1 lie to the left (higher order).
struct Split {
  int u_separator = 0;
  int v_separator = 0;
};

struct CrossingReport {
  bool premise1 = false;  ///< every U1 vertex has a neighbour in V1
  long long count1 = 0;   ///< edges U1-V2
  long long bound1 = 0;   ///< |U1| + |V2|
  bool premise2 = false;  ///< every V1 vertex has a neighbour in U1
  long long count2 = 0;   ///< edges V1-U2
  long long bound2 = 0;   ///< |V1| + |U2|

  /// The bound of every clause whose premise holds.
  bool holds() const { return (!premise1 || count1 <= bound1) && (!premise2 || count2 <= bound2); }
  bool vacuous() const { return !premise1 && !premise2; }
};

CrossingReport crossing_edge_bound(const OrderedBipartiteGraph& g, const Split& s);

/// Vertex subset as membership flags, indexed by (part, index).
class VertexSet {
 public:
  explicit VertexSet(const OrderedBipartiteGraph& g, bool full = false);
  bool contains(const Vertex& x) const;
  void insert(const Vertex& x);
  void erase(const Vertex& x);
  int size() const { return size_; }
  std::vector<Vertex> members() const;  ///< U ascending, then V ascending

 private:
  std::vector<char> u_, v_;
  int size_ = 0;
};

struct S1S2Partition {
  std::vector<Vertex> s1;
  std::vector<Vertex> s2;
  std::vector<Vertex> terminals;  ///< subset of s1
  int last_scanned_v = 0;         ///< V-separator: V1 = scanned = {v >= last_scanned_v}
};

/// Scans V-vertices of `active` in decreasing index order, absorbing each with
/// its active U-neighbours into S1 until |S1| >= |active|/2.
S1S2Partition partition_s1_s2(const OrderedBipartiteGraph& g, const VertexSet& active);
S1S2Partition partition_s1_s2(const OrderedBipartiteGraph& g);

/// Partition properties: (1) edges from S1 to vertices left of the separator
/// stay in S1, (2) every non-isolated S1 vertex has an induced S1 edge.
bool partition_properties_hold(const OrderedBipartiteGraph& g, const VertexSet& active,
                               const S1S2Partition& p);

/// Constant of the n log2 n + C n edge bound for PRBGs.
inline constexpr double kPrbgBoundConstant = 4.0;

struct CertificateNode {
  std::vector<Vertex> vertices;  ///< active vertices on entry
  int depth = 0;
  int isolated = 0;         ///< vertices dropped for having no induced edge
  bool leaf = false;
  long long leaf_edges = 0;
  long long crossing = 0;        ///< S1-S2 edges
  long long crossing_bound = 0;  ///< |U cap S1| + |V2|
  int terminals = 0;
  long long terminal_edges = 0;  ///< induced S1 edges at terminal vertices
  int s1_child = -1;
  int s2_child = -1;

  int n() const { return static_cast<int>(vertices.size()); }
};

struct BoundCertificate {
  std::vector<CertificateNode> nodes;  ///< nodes[0] is the root
  int vertex_count = 0;
  long long edges = 0;
  long long accounted_edges = 0;   ///< sum of crossing + terminal + leaf edges
  long long certified_bound = 0;   ///< sum of crossing bounds + terminal + leaf edges
  double constant = kPrbgBoundConstant;
  double nlogn_bound = 0;          ///< n log2 n + C n
  int depth = 0;
  std::optional<bool> prbg;        ///< set when the input was verified
  bool holds = false;              ///< edges <= certified_bound <= nlogn_bound
};

struct CertifyOptions {
  bool verify_input = true;
};

/// Throws std::logic_error if a recursion half exceeds ceil(n/2).
BoundCertificate certify_edge_bound(const OrderedBipartiteGraph& g, CertifyOptions options = {});

/// Recomputes every node from g and the recorded vertex sets. Returns a list
/// of problems; empty means the certificate is self-consistent.
std::vector<std::string> validate_certificate(const OrderedBipartiteGraph& g,
                                              const BoundCertificate& cert);

/// Strict path-restriction: for any T_r(v), v in V, spanned v1 < v2 with tree
/// parents u1 < u2, no edges (u1, v1'), (u2, v2') with v1' < v2' both outside
/// the span.
bool is_strictly_path_restricted(const OrderedBipartiteGraph& g);

/// Experimental: number of non-tree edges joining two vertices spanned by some
/// T_l(u), u in U. Reported, not asserted.
long long spbg_tl_remark_violations(const OrderedBipartiteGraph& g);

}  // namespace prbg

#endif  // PRBG_PRBG_STRUCTURE_HPP
