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


#include <set>

#include "doctest.h"
#include "prbg/decomposition.hpp"
#include "prbg/generators.hpp"
#include "prbg/prbg_structure.hpp"

using namespace prbg;

namespace {

Points2<double> pts(std::initializer_list<std::pair<double, double>> xs) {
  Points2<double> p(2, static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (auto [x, y] : xs) p.col(k++) << x, y;
  return p;
}

// Point 0 is u_1; points 1..3 are v_1..v_3 placed on a line.
AntipodalSplit line_split() {
  AntipodalSplit s;
  s.u_points = {0};
  s.v_points = {1, 2, 3};
  return s;
}

int which(const E1E2& r, const Edge& e) {
  if (std::find(r.e1.begin(), r.e1.end(), e) != r.e1.end()) return 1;
  if (std::find(r.e2.begin(), r.e2.end(), e) != r.e2.end()) return 2;
  return 0;
}

// Edge multiset of a decomposition mapped back to input point pairs.
std::multiset<PointPair> recovered_edges(const DecompositionResult& r) {
  std::multiset<PointPair> out(r.removed_noncrossing.begin(), r.removed_noncrossing.end());
  const int uc = static_cast<int>(r.u_points.size()), vc = static_cast<int>(r.v_points.size());
  auto add = [&](const Edge& e, bool reversed) {
    const int u = reversed ? uc + 1 - e.u : e.u, v = reversed ? vc + 1 - e.v : e.v;
    const int a = r.u_points[static_cast<std::size_t>(u - 1)], b = r.v_points[static_cast<std::size_t>(v - 1)];
    out.insert({std::min(a, b), std::max(a, b)});
  };
  for (const Edge& e : r.g1.edges()) add(e, false);
  for (const Edge& e : r.removed_extreme_g1) add(e, false);
  for (const Edge& e : r.g2.edges()) add(e, true);
  for (const Edge& e : r.removed_extreme_g2) add(e, true);
  return out;
}

}  // namespace

TEST_CASE("drop_noncrossing_edges") {
  const Points2<double> hex = gen_regular(6, 1.0);
  const auto g = unit_distance_graph(hex);
  const AntipodalSplit s = split_at_antipodal<double>(hex, {0, 3});
  const CrossingEdges c = drop_noncrossing_edges(g, s);
  CHECK(c.crossing.size() == 2);
  CHECK(c.removed.size() == 4);
  // Sides (0,1) and (3,4) cross the diagonal 0-3.
  CHECK(c.crossing == std::vector<Edge>{{1, 1}, {3, 3}});

  const auto lgg = greedy_max_lgg(gen_circle_points(32, 4), {true, 4});
  const ConvexPointSet<double> cs(lgg.points);
  const AntipodalSplit t = split_at_antipodal<double>(cs.points(), choose_balanced_pair(antipodal_pairs(cs), 32));
  GeometricGraph<double> canon{cs.points(), {}, lgg.tag};
  std::vector<int> pos(32);
  for (int k = 0; k < 32; ++k) pos[static_cast<std::size_t>(cs.source_index()[static_cast<std::size_t>(k)])] = k;
  for (const PointPair& e : lgg.edges) canon.edges.push_back({pos[static_cast<std::size_t>(e.i)], pos[static_cast<std::size_t>(e.j)]});
  canon.normalize();
  CHECK(drop_noncrossing_edges(canon, t).removed.size() <= 64);
}

TEST_CASE("partition_e1_e2 rule") {
  SUBCASE("interior vertex, right angle acute") {
    const Points2<double> p = pts({{0.5, 1}, {1, 0}, {0, 0}, {-1, 0}});
    CHECK(which(partition_e1_e2<double>(line_split(), {{1, 2}}, p), {1, 2}) == 1);
  }
  SUBCASE("both acute goes to E1") {
    const Points2<double> p = pts({{0, 1}, {1, 0.5}, {0, 0}, {-1, 0.5}});
    CHECK(which(partition_e1_e2<double>(line_split(), {{1, 2}}, p), {1, 2}) == 1);
  }
  SUBCASE("interior vertex, only left acute") {
    const Points2<double> p = pts({{-0.5, 1}, {1, 0}, {0, 0}, {-1, 0}});
    CHECK(which(partition_e1_e2<double>(line_split(), {{1, 2}}, p), {1, 2}) == 2);
  }
  SUBCASE("v1 has no right neighbour; acute left angle goes to E2") {
    const Points2<double> p = pts({{-0.5, 1}, {0, 0}, {-1, 0}, {-2, 0}});
    CHECK(which(partition_e1_e2<double>(line_split(), {{1, 1}}, p), {1, 1}) == 2);
  }
  SUBCASE("v1 with an obtuse left angle goes to the other set") {
    const Points2<double> p = pts({{0.5, 1}, {0, 0}, {-1, 0}, {-2, 0}});
    CHECK(which(partition_e1_e2<double>(line_split(), {{1, 1}}, p), {1, 1}) == 1);
  }
  SUBCASE("last vertex with an obtuse right angle goes to the other set") {
    const Points2<double> p = pts({{-0.5, 1}, {2, 0}, {1, 0}, {0, 0}});
    CHECK(which(partition_e1_e2<double>(line_split(), {{1, 3}}, p), {1, 3}) == 2);
  }
  SUBCASE("last vertex with an acute right angle goes to E1") {
    const Points2<double> p = pts({{0.5, 1}, {2, 0}, {1, 0}, {0, 0}});
    CHECK(which(partition_e1_e2<double>(line_split(), {{1, 3}}, p), {1, 3}) == 1);
  }
}

TEST_CASE("strip_extreme_edges") {
  const OrderedBipartiteGraph star(3, 1, {{1, 1}, {2, 1}, {3, 1}});
  std::vector<Edge> removed;
  const OrderedBipartiteGraph once = strip_extreme_edges(star, StripSide::left, &removed);
  CHECK(once.edges() == std::vector<Edge>{{1, 1}, {2, 1}});
  CHECK(removed == std::vector<Edge>{{3, 1}});
  CHECK(strip_extreme_edges(OrderedBipartiteGraph(2, 2, {}), StripSide::left).edge_count() == 0);
  const OrderedBipartiteGraph twice = strip_extreme_edges(once, StripSide::left);
  CHECK(twice.edges() == std::vector<Edge>{{1, 1}});
  CHECK(strip_extreme_edges(star, StripSide::right).edges() == std::vector<Edge>{{2, 1}, {3, 1}});
}

TEST_CASE("decompose examples") {
  const auto hex = unit_distance_graph(gen_regular(6, 1.0));
  const DecompositionResult h = decompose(hex);
  CHECK(h.verified);
  CHECK(check_forwardpath_noncrossing(h, hex.points));

  const auto lgg = greedy_max_lgg(gen_circle_points(24, 12));
  const DecompositionResult c = decompose(lgg);
  CHECK(c.verified);
  CHECK(c.total_removed() <= 72);
  CHECK(check_forwardpath_noncrossing(c, lgg.points));

  const auto tri = unit_distance_graph(gen_regular(3, 1.0));
  const DecompositionResult t = decompose(tri);
  CHECK(t.verified);
  CHECK(t.point_count == 3);
}

TEST_CASE("decompose conserves edges and respects the removal budgets") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 6 + static_cast<int>(seed % 30);
    for (const auto& g : {greedy_max_lgg(gen_lens_points(n, seed), {true, seed}),
                          greedy_max_lgg(gen_ellipse_points(n, seed, 0.1), {true, seed}),
                          unit_distance_graph(gen_zigzag_points(n, seed)),
                          gabriel_graph(gen_circle_points(n, seed))}) {
      const DecompositionResult r = decompose(g);
      CHECK(r.verified);
      CHECK(r.total_removed() <= 3 * n);
      CHECK(r.removed_noncrossing.size() <= static_cast<std::size_t>(2 * n));
      CHECK(r.removed_extreme_g1.size() <= r.v_points.size());
      CHECK(r.removed_extreme_g2.size() <= r.v_points.size());
      CHECK(recovered_edges(r) == std::multiset<PointPair>(g.edges.begin(), g.edges.end()));
      CHECK(check_forwardpath_noncrossing(r, g.points));
    }
  }
}

TEST_CASE("decompose input handling") {
  const Points2<double> clockwise = pts({{1, 1}, {1, 0}, {0, 0}, {0, 1}});
  const auto g = unit_distance_graph(clockwise);
  const DecompositionResult r = decompose(g);
  CHECK(r.verified);
  CHECK(recovered_edges(r) == std::multiset<PointPair>(g.edges.begin(), g.edges.end()));

  const auto out_of_order = unit_distance_graph(pts({{1, 1}, {0, 0}, {0, 1}, {1, 0}}));
  CHECK_THROWS_AS(decompose(out_of_order), InputError);

  const auto concave = unit_distance_graph(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}}));
  CHECK_THROWS_AS(decompose(concave), InputError);
}

TEST_CASE("hierarchy fixtures") {
  const auto fixtures = hierarchy_fixtures();
  REQUIRE(fixtures.size() == 2);
  for (const HierarchyFixture& f : fixtures) CHECK(is_prbg(f.graph) == f.expected_prbg);
  const HierarchyFixture& separating = fixtures[0];
  CHECK(separating.graph.edges() == std::vector<Edge>{{1, 1}, {1, 2}, {2, 1}, {3, 4}, {4, 3}, {4, 4}});
  CHECK(is_strictly_path_restricted(separating.graph));
  const auto v = verify_path_restricted(fixtures[1].graph);
  REQUIRE(v.has_value());
  CHECK(v->back_edge == Edge{2, 1});
  REQUIRE(v.has_value());
  CHECK(v->back_edge == Edge{2, 1});
}
