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

#include "prbg/decomposition.hpp"

#include <set>

namespace prbg {

OrderedBipartiteGraph strip_extreme_edges(const OrderedBipartiteGraph& g, StripSide side,
                                          std::vector<Edge>* removed) {
  std::set<Edge> drop;
  for (int v = 1; v <= g.v_count(); ++v) {
    auto n = g.v_neighbors(v);
    if (!n.empty()) drop.insert({side == StripSide::left ? n.back() : n.front(), v});
  }
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (!drop.count(e)) keep.push_back(e);
  if (removed) removed->assign(drop.begin(), drop.end());
  return with_edges(g, std::move(keep));
}

std::vector<HierarchyFixture> hierarchy_fixtures() {
  std::vector<HierarchyFixture> out;
  out.push_back({"lgg-not-udg",
                 OrderedBipartiteGraph(4, 4, {{1, 1}, {1, 2}, {2, 1}, {4, 4}, {3, 4}, {4, 3}}),
                 true,
                 "edge set reconstructed from the angle argument separating unit distance "
                 "graphs from locally Gabriel graphs; an interpretation, embeddability not checked"});
  out.push_back({"k22-control", OrderedBipartiteGraph(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}), false,
                 "complete bipartite K2,2, forbidden in every path-restricted graph"});
  return out;
}

}  // namespace prbg
