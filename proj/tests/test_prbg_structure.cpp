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


#include <cmath>

#include "doctest.h"
#include "prbg/decomposition.hpp"
#include "prbg/extremal.hpp"
#include "prbg/prbg_structure.hpp"
#include "prbg/random.hpp"

using namespace prbg;

namespace {

OrderedBipartiteGraph k22() { return {2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}}; }
OrderedBipartiteGraph a8() { return matrix_to_graph(build_matrix_A(8)); }

}  // namespace

TEST_CASE("build_path_tree") {
  const OrderedBipartiteGraph star(1, 3, {{1, 1}, {1, 2}, {1, 3}});
  const auto t = build_path_tree(star, u_vertex(1), Direction::rightward);
  REQUIRE(std::holds_alternative<PathTree>(t));
  const PathTree& tree = std::get<PathTree>(t);
  CHECK(tree.spanned.size() == 4);
  CHECK(tree.children(u_vertex(1)).size() == 3);
  CHECK(tree.maximal_paths().size() == 3);
  CHECK(tree.path_to(v_vertex(2)) == std::vector<Vertex>{u_vertex(1), v_vertex(2)});

  const auto m = build_path_tree(k22(), v_vertex(2), Direction::rightward);
  REQUIRE(std::holds_alternative<MergeEvent>(m));
  CHECK(std::get<MergeEvent>(m).vertex == v_vertex(1));

  const OrderedBipartiteGraph a = a8();
  CHECK(std::holds_alternative<PathTree>(build_path_tree(a, u_vertex(8), Direction::rightward)));
  CHECK_THROWS_AS(build_path_tree(a, u_vertex(9), Direction::rightward), InputError);
}

TEST_CASE("path trees of sampled PRBGs never merge") {
  Rng rng(8);
  for (int t = 0; t < 60; ++t) {
    const OrderedBipartiteGraph g = repair_sample_prbg(rng.uniform_int(2, 7), rng.uniform_int(2, 7), 0.6, rng);
    for (int i = 1; i <= g.u_count(); ++i)
      for (Direction d : {Direction::rightward, Direction::leftward})
        CHECK(std::holds_alternative<PathTree>(build_path_tree(g, u_vertex(i), d)));
    for (int j = 1; j <= g.v_count(); ++j)
      for (Direction d : {Direction::rightward, Direction::leftward})
        CHECK(std::holds_alternative<PathTree>(build_path_tree(g, v_vertex(j), d)));
  }
}

TEST_CASE("check_unique_incidence") {
  const OrderedBipartiteGraph g(3, 2, {{1, 1}, {1, 2}, {2, 2}, {3, 1}});
  CHECK(check_unique_incidence(g, ForwardPath{{v_vertex(1), u_vertex(1), v_vertex(2), u_vertex(2)}}));
  const OrderedBipartiteGraph h(2, 2, {{1, 1}, {1, 2}, {2, 2}});
  CHECK(check_unique_incidence(h, ForwardPath{{v_vertex(1), u_vertex(1), v_vertex(2)}}));
  // u2 sees both v1 and v2 of the path in K22.
  CHECK_FALSE(check_unique_incidence(k22(), ForwardPath{{v_vertex(1), u_vertex(1), v_vertex(2)}}));
}

TEST_CASE("tree_span_edge_count") {
  CHECK(tree_span_edge_count(OrderedBipartiteGraph(1, 1, {{1, 1}}), v_vertex(1)) == SpanCount{2, 1});
  CHECK(tree_span_edge_count(OrderedBipartiteGraph(1, 2, {{1, 1}, {1, 2}}), u_vertex(1)) == SpanCount{3, 2});
  const SpanCount c = tree_span_edge_count(a8(), u_vertex(8));
  CHECK(c.induced_edges == c.spanned - 1);
  CHECK_THROWS_AS(tree_span_edge_count(k22(), v_vertex(2)), MergeError);
}

TEST_CASE("check_disjoint_tl_ranges") {
  CHECK(check_disjoint_tl_ranges(OrderedBipartiteGraph(2, 1, {{1, 1}, {2, 1}}), v_vertex(1)));
  const OrderedBipartiteGraph a = a8();
  for (int i = 1; i <= 8; ++i) {
    CHECK(check_disjoint_tl_ranges(a, u_vertex(i)));
    CHECK(check_disjoint_tl_ranges(a, v_vertex(i)));
  }
  // K22 plus a pendant edge.
  const OrderedBipartiteGraph bad(3, 3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 3}});
  CHECK_FALSE(is_prbg(bad));
  CHECK_FALSE(check_disjoint_tl_ranges(bad, u_vertex(1)));
}

TEST_CASE("classify_p3") {
  const OrderedBipartiteGraph path(2, 2, {{1, 1}, {1, 2}, {2, 2}});
  const P3Census c = classify_p3(path);
  CHECK(c.as_array() == std::array<long long, 4>{1, 0, 0, 0});
  CHECK(classify_p3(reverse_orders(path)).as_array() == std::array<long long, 4>{0, 1, 0, 0});
  CHECK(classify_p3(k22()).total() == 4);
  CHECK(classify_p3(k22()).as_array() == std::array<long long, 4>{1, 1, 1, 1});
  CHECK(p3_type({v_vertex(1), u_vertex(1), v_vertex(2), u_vertex(2)}) == 1);
  CHECK_THROWS_AS(p3_type({v_vertex(1), v_vertex(2), u_vertex(1), u_vertex(2)}), InputError);
}

TEST_CASE("assert_acyclic_if_type_missing") {
  const OrderedBipartiteGraph tree(3, 3, {{1, 1}, {1, 2}, {2, 2}, {3, 2}, {3, 3}});
  CHECK(assert_acyclic_if_type_missing(tree).status == AcyclicityReport::Status::ok);
  const OrderedBipartiteGraph staircase(4, 4, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}});
  const AcyclicityReport s = assert_acyclic_if_type_missing(staircase);
  CHECK(s.status == AcyclicityReport::Status::ok);
  CHECK(s.census.type1 == 3);
  CHECK(s.census.type2 == 2);
  CHECK(s.census.type3 + s.census.type4 == 0);

  // Every cyclic PRBG on 3 + 3 vertices has all four P3 types.
  int cyclic_prbgs = 0;
  for (int mask = 0; mask < (1 << 9); ++mask) {
    std::vector<Edge> edges;
    for (int k = 0; k < 9; ++k)
      if (mask >> k & 1) edges.push_back({k / 3 + 1, k % 3 + 1});
    const OrderedBipartiteGraph g(3, 3, edges);
    if (!find_cycle(g) || !is_prbg(g)) continue;
    ++cyclic_prbgs;
    CHECK_FALSE(classify_p3(g).has_missing_type());
    CHECK(assert_acyclic_if_type_missing(g).status == AcyclicityReport::Status::precondition_failed);
  }
  CHECK(cyclic_prbgs > 0);
  CHECK(assert_acyclic_if_type_missing(k22()).status == AcyclicityReport::Status::precondition_failed);
}

TEST_CASE("find_cycle returns a closed walk") {
  const auto c = find_cycle(k22());
  REQUIRE(c.has_value());
  CHECK(c->size() == 4);
  for (std::size_t k = 0; k < c->size(); ++k) {
    const Vertex a = (*c)[k], b = (*c)[(k + 1) % c->size()];
    REQUIRE(a.part != b.part);
    CHECK(k22().has_edge(a.part == Part::U ? a.index : b.index, a.part == Part::U ? b.index : a.index));
  }
  CHECK_FALSE(find_cycle(OrderedBipartiteGraph(2, 2, {{1, 1}, {2, 2}})).has_value());
}

TEST_CASE("peel_leftmost and longest_forward_path_length") {
  const OrderedBipartiteGraph star(3, 1, {{1, 1}, {2, 1}, {3, 1}});
  CHECK(peel_leftmost(star).edges() == std::vector<Edge>{{1, 1}, {2, 1}});
  CHECK(peel_leftmost(OrderedBipartiteGraph(2, 2, {})).edge_count() == 0);
  const OrderedBipartiteGraph path(2, 2, {{1, 1}, {1, 2}, {2, 2}});
  CHECK(longest_forward_path_length(path) == 3);
  CHECK(longest_forward_path_length(peel_leftmost(path, PeelScope::all_vertices)) <= 2);

  CHECK(longest_forward_path_length(OrderedBipartiteGraph(1, 1, {{1, 1}})) == 1);
  CHECK(longest_forward_path_length(OrderedBipartiteGraph(1, 1, {})) == 0);
  CHECK(longest_forward_path_length(k22()) == 3);
  CHECK(longest_forward_path_length(a8()) == 4);

  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    const OrderedBipartiteGraph g = random_bipartite(rng.uniform_int(1, 6), rng.uniform_int(1, 6), 0.5, rng);
    int longest = 0;
    for (const ForwardPath& p : enumerate_forward_paths(g, 1)) longest = std::max(longest, p.edge_count());
    CHECK(longest_forward_path_length(g) == longest);
  }
}

TEST_CASE("check_bounded_path_bound") {
  const BoundedPathReport star = check_bounded_path_bound(OrderedBipartiteGraph(1, 3, {{1, 1}, {1, 2}, {1, 3}}));
  CHECK(star.k == 2);
  CHECK(star.holds);
  const BoundedPathReport k1 = check_bounded_path_bound(OrderedBipartiteGraph(1, 1, {{1, 1}}));
  CHECK(k1.k == 1);
  CHECK(k1.holds);
  const OrderedBipartiteGraph double_star(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
  const BoundedPathReport ds = check_bounded_path_bound(double_star);
  CHECK(ds.k == 3);
  CHECK(ds.holds);
  CHECK(ds.bound == 2 * 6 - 1);
  const BoundedPathReport a = check_bounded_path_bound(a8());
  CHECK(a.k == 4);
  CHECK(a.holds);
  CHECK(a.remaining_acyclic);
}

TEST_CASE("crossing_edge_bound") {
  const OrderedBipartiteGraph g(2, 2, {{2, 2}, {2, 1}});
  const CrossingReport r = crossing_edge_bound(g, {1, 1});
  CHECK(r.premise1);
  CHECK(r.count1 == 1);
  CHECK(r.bound1 == 2);
  CHECK(r.holds());

  const OrderedBipartiteGraph h(2, 2, {{2, 1}});
  const CrossingReport v = crossing_edge_bound(h, {1, 1});
  CHECK_FALSE(v.premise1);
  CHECK_THROWS_AS(crossing_edge_bound(h, {3, 0}), InputError);

  Rng rng(21);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const OrderedBipartiteGraph s = repair_sample_prbg(rng.uniform_int(2, 7), rng.uniform_int(2, 7), 0.6, rng);
    const CrossingReport c = crossing_edge_bound(s, {rng.uniform_int(0, s.u_count()), rng.uniform_int(0, s.v_count())});
    checked += !c.vacuous();
    CHECK(c.holds());
  }
  CHECK(checked > 50);
}

TEST_CASE("partition_s1_s2") {
  const OrderedBipartiteGraph single(1, 1, {{1, 1}});
  const S1S2Partition p = partition_s1_s2(single);
  CHECK(p.s1.size() == 2);
  CHECK(p.s2.empty());

  const OrderedBipartiteGraph a = a8();
  const S1S2Partition q = partition_s1_s2(a);
  CHECK(q.s1.size() >= 8);
  CHECK(partition_properties_hold(a, VertexSet(a, true), q));

  // v3 is isolated and is scanned first.
  const OrderedBipartiteGraph iso(2, 3, {{1, 1}, {2, 2}});
  const S1S2Partition r = partition_s1_s2(iso);
  CHECK(r.s1 == std::vector<Vertex>{u_vertex(2), v_vertex(2), v_vertex(3)});
}

TEST_CASE("certify_edge_bound") {
  const OrderedBipartiteGraph single(1, 1, {{1, 1}});
  const BoundCertificate c = certify_edge_bound(single);
  CHECK(c.nodes.size() == 1);
  CHECK(c.nodes[0].leaf);
  CHECK(c.certified_bound == 1);
  CHECK(c.holds);
  CHECK(c.nlogn_bound == doctest::Approx(2 + kPrbgBoundConstant * 2));

  for (int n : {8, 16, 32, 64}) {
    const OrderedBipartiteGraph g = matrix_to_graph(build_matrix_A(n));
    const BoundCertificate cert = certify_edge_bound(g, {n <= 16});
    CHECK(cert.edges == ones_count_closed_form(n));
    CHECK(cert.accounted_edges == cert.edges);
    CHECK(cert.holds);
    CHECK(validate_certificate(g, cert).empty());
  }

  Rng rng(99);
  const OrderedBipartiteGraph big = repair_sample_prbg(100, 100, 0.02, rng);
  const BoundCertificate b = certify_edge_bound(big, {false});
  CHECK(b.holds);
  CHECK(validate_certificate(big, b).empty());
}

TEST_CASE("certificate validation catches tampering") {
  const OrderedBipartiteGraph g = matrix_to_graph(build_matrix_A(16));
  BoundCertificate c = certify_edge_bound(g, {false});
  REQUIRE(validate_certificate(g, c).empty());
  BoundCertificate wrong_count = c;
  wrong_count.nodes[0].crossing += 1;
  CHECK_FALSE(validate_certificate(g, wrong_count).empty());
  BoundCertificate wrong_set = c;
  wrong_set.nodes[0].vertices.pop_back();
  CHECK_FALSE(validate_certificate(g, wrong_set).empty());
}

TEST_CASE("non-PRBG input still yields a certificate") {
  const BoundCertificate c = certify_edge_bound(k22());
  REQUIRE(c.prbg.has_value());
  CHECK_FALSE(*c.prbg);
  CHECK(validate_certificate(k22(), c).empty());
}

TEST_CASE("is_strictly_path_restricted") {
  CHECK(is_strictly_path_restricted(OrderedBipartiteGraph(3, 3, {{1, 1}, {2, 1}, {2, 2}, {3, 3}})));
  CHECK(is_strictly_path_restricted(a8()));
  CHECK(spbg_tl_remark_violations(a8()) == 10);
  for (int n : {16, 32}) {
    const OrderedBipartiteGraph a = matrix_to_graph(build_matrix_A(n));
    CHECK(is_prbg(a));
    CHECK_FALSE(is_strictly_path_restricted(a));
  }
  for (const HierarchyFixture& f : hierarchy_fixtures())
    if (f.expected_prbg) CHECK(is_strictly_path_restricted(f.graph));
}
