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

// JSON and CSV formats. Bipartite graphs and matrices are 1-based; point
// indices of geometric graphs are 0-based array positions.

#ifndef PRBG_IO_HPP
#define PRBG_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "prbg/decomposition.hpp"
#include "prbg/extremal.hpp"
#include "prbg/ordered_bipartite.hpp"
#include "prbg/prbg_structure.hpp"
#include "prbg/proximity.hpp"

namespace prbg {

using Json = nlohmann::json;

/// Malformed file content. Derives from InputError so callers map it to a usage error.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

Json read_json_file(const std::string& path);
/// Two-space indented, trailing newline.
void write_json(std::ostream& os, const Json& j);
std::string dump_json(const Json& j);

Json to_json(const Vertex& x);
Vertex vertex_from_json(const Json& j);
Json to_json(const ForwardPath& p);

/// {"u_count", "v_count", "edges": [[u,v],...]} with sorted edges.
Json to_json(const OrderedBipartiteGraph& g);
OrderedBipartiteGraph graph_from_json(const Json& j);

/// {"n_rows", "n_cols", "ones": [[r,c],...]}
Json to_json(const ZeroOneMatrix& m);
ZeroOneMatrix matrix_from_json(const Json& j);

/// {"points": [[x,y],...]}
Json points_to_json(const Points2<double>& p);
Points2<double> points_from_json(const Json& j);

/// Point block plus {"edges": [[i,j],...], "class": "udg"|"gabriel"|"lgg"}.
Json to_json(const GeometricGraph<double>& g);
GeometricGraph<double> geometric_graph_from_json(const Json& j);

Json to_json(const Violation& v);
Json to_json(const ConflictWitness& w);
Json to_json(const StaircaseWitness& w);
Json to_json(const P3Census& c);
Json to_json(const BoundedPathReport& r);
Json to_json(const CrossingReport& r);
Json to_json(const BoundCertificate& c);
Json to_json(const DecompositionResult& r);

/// Comma separated rows; fields containing a comma or quote are quoted.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& os_;
  std::size_t width_;
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace prbg

#endif  // PRBG_IO_HPP
