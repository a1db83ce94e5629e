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

#include "prbg/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace prbg {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json(std::ostream& os, const Json& j) { os << dump_json(j); }

namespace {

// Field access with a FormatError instead of nlohmann's exceptions.
const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<int>();
}

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw FormatError(std::string(what) + " must be finite");
  return x;
}

std::pair<int, int> int_pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw FormatError(std::string(what) + " must be a pair");
  return {as_int(j[0], what), as_int(j[1], what)};
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw FormatError(std::string("field '") + key + "' must be an array");
  return a;
}

Json vertex_list(const std::vector<Vertex>& xs) {
  Json a = Json::array();
  for (const Vertex& x : xs) a.push_back(to_json(x));
  return a;
}

Json edge_list(const std::vector<Edge>& es) {
  Json a = Json::array();
  for (const Edge& e : es) a.push_back({e.u, e.v});
  return a;
}

Json pair_list(const std::vector<PointPair>& es) {
  Json a = Json::array();
  for (const PointPair& e : es) a.push_back({e.i, e.j});
  return a;
}

}  // namespace

Json to_json(const Vertex& x) { return to_string(x); }

Vertex vertex_from_json(const Json& j) {
  if (!j.is_string()) throw FormatError("vertex must be a string like \"u3\"");
  const std::string s = j.get<std::string>();
  if (s.size() < 2 || (s[0] != 'u' && s[0] != 'v')) throw FormatError("bad vertex '" + s + "'");
  int idx = 0;
  auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), idx);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError("bad vertex '" + s + "'");
  return {s[0] == 'u' ? Part::U : Part::V, idx};
}

Json to_json(const ForwardPath& p) { return vertex_list(p.vertices); }

Json to_json(const OrderedBipartiteGraph& g) {
  return {{"u_count", g.u_count()}, {"v_count", g.v_count()}, {"edges", edge_list(g.edges())}};
}

OrderedBipartiteGraph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const Json& e : array_field(j, "edges")) {
    auto [u, v] = int_pair(e, "edge");
    edges.push_back({u, v});
  }
  return OrderedBipartiteGraph(as_int(field(j, "u_count"), "u_count"),
                               as_int(field(j, "v_count"), "v_count"), std::move(edges));
}

Json to_json(const ZeroOneMatrix& m) {
  Json ones = Json::array();
  for (const Cell& c : m.ones()) ones.push_back({c.row, c.col});
  return {{"n_rows", m.n_rows()}, {"n_cols", m.n_cols()}, {"ones", ones}};
}

ZeroOneMatrix matrix_from_json(const Json& j) {
  std::vector<Cell> ones;
  for (const Json& c : array_field(j, "ones")) {
    auto [r, col] = int_pair(c, "cell");
    ones.push_back({r, col});
  }
  return ZeroOneMatrix(as_int(field(j, "n_rows"), "n_rows"), as_int(field(j, "n_cols"), "n_cols"),
                       std::move(ones));
}

Json points_to_json(const Points2<double>& p) {
  Json a = Json::array();
  for (Eigen::Index k = 0; k < p.cols(); ++k) a.push_back({p(0, k), p(1, k)});
  return {{"points", a}};
}

Points2<double> points_from_json(const Json& j) {
  const Json& a = array_field(j, "points");
  Points2<double> p(2, static_cast<Eigen::Index>(a.size()));
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_array() || a[k].size() != 2) throw FormatError("point must be [x, y]");
    p(0, static_cast<Eigen::Index>(k)) = as_double(a[k][0], "x");
    p(1, static_cast<Eigen::Index>(k)) = as_double(a[k][1], "y");
  }
  return p;
}

Json to_json(const GeometricGraph<double>& g) {
  Json j = points_to_json(g.points);
  j["edges"] = pair_list(g.edges);
  j["class"] = to_string(g.tag);
  return j;
}

GeometricGraph<double> geometric_graph_from_json(const Json& j) {
  GeometricGraph<double> g;
  g.points = points_from_json(j);
  for (const Json& e : array_field(j, "edges")) {
    auto [a, b] = int_pair(e, "edge");
    g.edges.push_back({a, b});
  }
  if (j.contains("class")) {
    if (!j["class"].is_string()) throw FormatError("class must be a string");
    g.tag = graph_class_from_string(j["class"].get<std::string>());
  }
  g.normalize();
  return g;
}

Json to_json(const Violation& v) {
  return {{"path", to_json(v.path)},
          {"back_edge", {v.back_edge.u, v.back_edge.v}},
          {"side", v.side == ViolationSide::v_side ? "v" : "u"},
          {"mirrored", v.mirrored}};
}

Json to_json(const ConflictWitness& w) {
  return {{"u", w.u}, {"v", w.v}, {"w", w.w}};
}

Json to_json(const StaircaseWitness& w) {
  Json cells = Json::array();
  for (const Cell& c : w.staircase) cells.push_back({c.row, c.col});
  return {{"staircase", cells}, {"extra", {w.extra.row, w.extra.col}}, {"violation", to_json(w.violation)}};
}

Json to_json(const P3Census& c) {
  return {{"type1", c.type1}, {"type2", c.type2}, {"type3", c.type3}, {"type4", c.type4}, {"total", c.total()}};
}

Json to_json(const BoundedPathReport& r) {
  return {{"k", r.k},
          {"vertices", r.vertex_count},
          {"edges", r.edges},
          {"bound", r.bound},
          {"peel_rounds", r.peel_rounds},
          {"peeled_edges", r.peeled_edges},
          {"remaining_edges", r.remaining_edges},
          {"remaining_acyclic", r.remaining_acyclic},
          {"holds", r.holds}};
}

Json to_json(const CrossingReport& r) {
  return {{"premise1", r.premise1}, {"count1", r.count1}, {"bound1", r.bound1},
          {"premise2", r.premise2}, {"count2", r.count2}, {"bound2", r.bound2},
          {"holds", r.holds()},     {"vacuous", r.vacuous()}};
}

Json to_json(const BoundCertificate& c) {
  Json nodes = Json::array();
  for (const CertificateNode& n : c.nodes) {
    Json j = {{"n", n.n()}, {"depth", n.depth}, {"vertices", vertex_list(n.vertices)}};
    if (n.leaf) {
      j["leaf"] = true;
      j["leaf_edges"] = n.leaf_edges;
    } else {
      j["isolated"] = n.isolated;
      j["crossing"] = n.crossing;
      j["crossing_bound"] = n.crossing_bound;
      j["terminals"] = n.terminals;
      j["terminal_edges"] = n.terminal_edges;
      j["s1_child"] = n.s1_child;
      j["s2_child"] = n.s2_child;
    }
    nodes.push_back(std::move(j));
  }
  Json j = {{"vertices", c.vertex_count},
            {"edges", c.edges},
            {"accounted_edges", c.accounted_edges},
            {"certified_bound", c.certified_bound},
            {"constant", c.constant},
            {"nlogn_bound", c.nlogn_bound},
            {"depth", c.depth},
            {"holds", c.holds},
            {"nodes", nodes}};
  j["prbg"] = c.prbg ? Json(*c.prbg) : Json(nullptr);
  return j;
}

Json to_json(const DecompositionResult& r) {
  return {{"points", r.point_count},
          {"input_edges", r.input_edges},
          {"antipodal_pair", {r.antipodal_low, r.antipodal_high}},
          {"u_points", r.u_points},
          {"v_points", r.v_points},
          {"removed_noncrossing", pair_list(r.removed_noncrossing)},
          {"e1", edge_list(r.e1)},
          {"e2", edge_list(r.e2)},
          {"g1", to_json(r.g1)},
          {"g2", to_json(r.g2)},
          {"removed_extreme_g1", edge_list(r.removed_extreme_g1)},
          {"removed_extreme_g2", edge_list(r.removed_extreme_g2)},
          {"total_removed", r.total_removed()},
          {"verified", r.verified}};
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header)
    : os_(os), width_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw std::logic_error("CSV row width differs from header");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os_ << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      os_ << f;
      continue;
    }
    os_ << '"';
    for (char c : f) os_ << (c == '"' ? "\"\"" : std::string(1, c));
    os_ << '"';
  }
  os_ << '\n';
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::logic_error("double formatting failed");
  return std::string(buf, ptr);
}

}  // namespace prbg
