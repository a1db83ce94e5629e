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

// Standalone SVG documents. Element classes ("point", "edge", "e1", "e2",
// "antipodal", "unit-bar", "cell-one", ...) make the output easy to inspect.

#ifndef PRBG_SVG_HPP
#define PRBG_SVG_HPP

#include <optional>
#include <string>

#include "prbg/decomposition.hpp"
#include "prbg/extremal.hpp"
#include "prbg/proximity.hpp"

namespace prbg {

std::string render_points_svg(const Points2<double>& points);

/// Edges and points with a unit scale bar; the two edges of a conflict
/// witness are drawn in red.
std::string render_graph_svg(const GeometricGraph<double>& g,
                             const std::optional<ConflictWitness>& conflict = std::nullopt);

/// Antipodal line, E1 edges solid, E2 edges dashed, removed edges faint.
std::string render_decomposition_svg(const GeometricGraph<double>& g, const DecompositionResult& r);

/// Grid with filled cells for ones; row n_rows on top.
std::string render_matrix_svg(const ZeroOneMatrix& m);

}  // namespace prbg

#endif  // PRBG_SVG_HPP
