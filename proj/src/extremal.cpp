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

#include "prbg/extremal.hpp"

#include <algorithm>
#include <sstream>

namespace prbg {

ZeroOneMatrix::ZeroOneMatrix(int n_rows, int n_cols, std::vector<Cell> ones)
    : n_rows_(n_rows), n_cols_(n_cols), ones_(std::move(ones)) {
  if (n_rows_ < 1 || n_cols_ < 1) throw InputError("matrix dimensions must be positive");
  for (const Cell& c : ones_)
    if (c.row < 1 || c.row > n_rows_ || c.col < 1 || c.col > n_cols_)
      throw InputError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                       ") out of range");
  std::sort(ones_.begin(), ones_.end());
  if (std::adjacent_find(ones_.begin(), ones_.end()) != ones_.end())
    throw InputError("duplicate matrix cell");
}

bool ZeroOneMatrix::at(int row, int col) const {
  return std::binary_search(ones_.begin(), ones_.end(), Cell{row, col});
}

ZeroOneMatrix build_matrix_A(int n) {
  if (n < 1) throw InputError("matrix A needs n >= 1");
  std::vector<Cell> ones;
  for (int i = 1; i <= n; ++i)
    for (long long p = 1; p <= 2LL * n; p *= 2) {
      const long long j = p + n - i;
      if (j >= 1 && j <= n) ones.push_back({i, static_cast<int>(j)});
    }
  return ZeroOneMatrix(n, n, std::move(ones));
}

long long ones_count_closed_form(int n) {
  if (n < 1) throw InputError("closed form needs n >= 1");
  long long total = 0;
  for (long long p = 1; p <= n; p *= 2) total += n - p + 1;
  return total;
}

Cell edge_to_cell(const OrderedBipartiteGraph& g, const Edge& e, MatrixOrientation o) {
  return {o.rows_descending ? g.u_count() + 1 - e.u : e.u,
          o.cols_descending ? g.v_count() + 1 - e.v : e.v};
}

OrderedBipartiteGraph matrix_to_graph(const ZeroOneMatrix& m, MatrixOrientation o) {
  std::vector<Edge> edges;
  edges.reserve(m.ones_count());
  for (const Cell& c : m.ones())
    edges.push_back({o.rows_descending ? m.n_rows() + 1 - c.row : c.row,
                     o.cols_descending ? m.n_cols() + 1 - c.col : c.col});
  return OrderedBipartiteGraph(m.n_rows(), m.n_cols(), std::move(edges));
}

ZeroOneMatrix graph_to_matrix(const OrderedBipartiteGraph& g, MatrixOrientation o) {
  std::vector<Cell> ones;
  ones.reserve(g.edge_count());
  for (const Edge& e : g.edges()) ones.push_back(edge_to_cell(g, e, o));
  return ZeroOneMatrix(g.u_count(), g.v_count(), std::move(ones));
}

std::optional<StaircaseWitness> find_staircase_violation(const ZeroOneMatrix& m,
                                                         MatrixOrientation o) {
  const OrderedBipartiteGraph g = matrix_to_graph(m, o);
  auto v = verify_path_restricted(g);
  if (!v) return std::nullopt;
  StaircaseWitness w;
  for (const Edge& e : v->path.edges()) w.staircase.push_back(edge_to_cell(g, e, o));
  w.extra = edge_to_cell(g, v->back_edge, o);
  w.violation = std::move(*v);
  return w;
}

bool row_gaps_strictly_increasing(const ZeroOneMatrix& m) {
  auto it = m.ones().begin();
  while (it != m.ones().end()) {
    const int row = it->row;
    int prev_col = -1, prev_gap = 0;
    for (; it != m.ones().end() && it->row == row; ++it) {
      if (prev_col >= 0) {
        const int gap = it->col - prev_col;
        if (gap <= prev_gap) return false;
        prev_gap = gap;
      }
      prev_col = it->col;
    }
  }
  return true;
}

std::string render_matrix_text(const ZeroOneMatrix& m, bool blank_upper_left) {
  const int label = static_cast<int>(std::to_string(m.n_rows()).size());
  std::ostringstream os;
  for (int i = m.n_rows(); i >= 1; --i) {
    std::string row = std::to_string(i);
    os << std::string(static_cast<std::size_t>(label) - row.size(), ' ') << row << " |";
    std::string line;
    for (int j = 1; j <= m.n_cols(); ++j) {
      line += ' ';
      if (blank_upper_left && i + j <= m.n_rows())
        line += ' ';
      else
        line += m.at(i, j) ? '1' : '0';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace prbg
