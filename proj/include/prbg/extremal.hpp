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

// 0-1 matrices, the power-of-two diagonal construction A(n) and its reading
// as an ordered bipartite graph.

#ifndef PRBG_EXTREMAL_HPP
#define PRBG_EXTREMAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prbg/ordered_bipartite.hpp"

namespace prbg {

struct Cell {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Sparse 0-1 matrix, 1-based cells, kept sorted and duplicate free.
class ZeroOneMatrix {
 public:
  /// Throws InputError on non-positive dimensions, out-of-range or repeated cells.
  ZeroOneMatrix(int n_rows, int n_cols, std::vector<Cell> ones);

  int n_rows() const { return n_rows_; }
  int n_cols() const { return n_cols_; }
  const std::vector<Cell>& ones() const { return ones_; }
  std::size_t ones_count() const { return ones_.size(); }
  bool at(int row, int col) const;

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  int n_rows_;
  int n_cols_;
  std::vector<Cell> ones_;
};

/// n x n matrix with A(i,j) = 1 iff i + j - n is a power of two (2^0 = 1 included).
ZeroOneMatrix build_matrix_A(int n);

/// Sum over 2^k <= n of (n - 2^k + 1).
long long ones_count_closed_form(int n);

/// How rows and columns map to U and V indices.
struct MatrixOrientation {
  bool rows_descending = true;  ///< u = n_rows + 1 - row
  bool cols_descending = true;  ///< v = n_cols + 1 - col

  friend bool operator==(const MatrixOrientation&, const MatrixOrientation&) = default;
};

/// The orientation under which A(8) is path-restricted (the only one of the four).
inline constexpr MatrixOrientation kDefaultOrientation{};

OrderedBipartiteGraph matrix_to_graph(const ZeroOneMatrix& m,
                                      MatrixOrientation orientation = kDefaultOrientation);
ZeroOneMatrix graph_to_matrix(const OrderedBipartiteGraph& g,
                              MatrixOrientation orientation = kDefaultOrientation);
Cell edge_to_cell(const OrderedBipartiteGraph& g, const Edge& e,
                  MatrixOrientation orientation = kDefaultOrientation);

/// Matrix image of a path-restricted violation.
struct StaircaseWitness {
  std::vector<Cell> staircase;  ///< path edges as cells, in path order
  Cell extra;                   ///< the back edge
  Violation violation;          ///< in graph coordinates
};

std::optional<StaircaseWitness> find_staircase_violation(
    const ZeroOneMatrix& m, MatrixOrientation orientation = kDefaultOrientation);

/// Gaps between consecutive ones in every row strictly increase.
bool row_gaps_strictly_increasing(const ZeroOneMatrix& m);

/// Text grid, top row = n_rows. With `blank_upper_left`, cells with
/// row + col <= n_rows (below the first power-of-two diagonal of A) print as
/// blanks, matching the usual drawing of A.
std::string render_matrix_text(const ZeroOneMatrix& m, bool blank_upper_left = false);

}  // namespace prbg

#endif  // PRBG_EXTREMAL_HPP
