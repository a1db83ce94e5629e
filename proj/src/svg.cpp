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

#include "prbg/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace prbg {

namespace {

constexpr double kCanvas = 600;
constexpr double kMargin = 40;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// World -> canvas transform with y flipped and a uniform scale.
class Frame {
 public:
  explicit Frame(const Points2<double>& p) {
    if (p.cols() == 0) return;
    lo_ = p.rowwise().minCoeff();
    hi_ = p.rowwise().maxCoeff();
    const double span = std::max({hi_.x() - lo_.x(), hi_.y() - lo_.y(), 1e-9});
    scale_ = (kCanvas - 2 * kMargin) / span;
  }
  double x(double wx) const { return kMargin + (wx - lo_.x()) * scale_; }
  double y(double wy) const { return kCanvas - kMargin - (wy - lo_.y()) * scale_; }
  double scale() const { return scale_; }

 private:
  Eigen::Vector2d lo_ = Eigen::Vector2d::Zero(), hi_ = Eigen::Vector2d::Zero();
  double scale_ = 1;
};

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kCanvas) + "\" height=\"" +
         num(kCanvas) + "\" viewBox=\"0 0 " + num(kCanvas) + " " + num(kCanvas) + "\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void line(std::ostream& os, const Frame& f, const Point2<double>& a, const Point2<double>& b,
          const std::string& cls, const std::string& style) {
  os << "<line class=\"" << cls << "\" x1=\"" << num(f.x(a.x())) << "\" y1=\"" << num(f.y(a.y()))
     << "\" x2=\"" << num(f.x(b.x())) << "\" y2=\"" << num(f.y(b.y())) << "\" " << style << "/>\n";
}

void points(std::ostream& os, const Frame& f, const Points2<double>& p) {
  for (Eigen::Index k = 0; k < p.cols(); ++k) {
    os << "<circle class=\"point\" cx=\"" << num(f.x(p(0, k))) << "\" cy=\"" << num(f.y(p(1, k)))
       << "\" r=\"3\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(f.x(p(0, k)) + 5) << "\" y=\"" << num(f.y(p(1, k)) - 5)
       << "\" font-size=\"10\">" << k << "</text>\n";
  }
}

void unit_bar(std::ostream& os, const Frame& f) {
  const double y = kCanvas - kMargin / 2;
  os << "<line class=\"unit-bar\" x1=\"" << num(kMargin) << "\" y1=\"" << num(y) << "\" x2=\""
     << num(kMargin + f.scale()) << "\" y2=\"" << num(y) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  os << "<text x=\"" << num(kMargin) << "\" y=\"" << num(y - 4) << "\" font-size=\"10\">1</text>\n";
}

}  // namespace

std::string render_points_svg(const Points2<double>& p) {
  const Frame f(p);
  std::ostringstream os;
  os << header();
  points(os, f, p);
  unit_bar(os, f);
  os << "</svg>\n";
  return os.str();
}

std::string render_graph_svg(const GeometricGraph<double>& g, const std::optional<ConflictWitness>& conflict) {
  const Frame f(g.points);
  std::ostringstream os;
  os << header();
  auto hot = [&](const PointPair& e) {
    if (!conflict) return false;
    auto is = [&](int a, int b) { return (e.i == a && e.j == b) || (e.i == b && e.j == a); };
    return is(conflict->u, conflict->v) || is(conflict->u, conflict->w);
  };
  for (const PointPair& e : g.edges) {
    if (hot(e))
      line(os, f, g.points.col(e.i), g.points.col(e.j), "edge conflict", "stroke=\"red\" stroke-width=\"2.5\"");
    else
      line(os, f, g.points.col(e.i), g.points.col(e.j), "edge", "stroke=\"#1f4e8c\" stroke-width=\"1.2\"");
  }
  points(os, f, g.points);
  unit_bar(os, f);
  os << "</svg>\n";
  return os.str();
}

std::string render_decomposition_svg(const GeometricGraph<double>& g, const DecompositionResult& r) {
  const Frame f(g.points);
  std::ostringstream os;
  os << header();
  for (const PointPair& e : r.removed_noncrossing)
    line(os, f, g.points.col(e.i), g.points.col(e.j), "removed", "stroke=\"#bbbbbb\" stroke-width=\"1\"");
  auto pt = [&](const std::vector<int>& side, int k) { return g.points.col(side[static_cast<std::size_t>(k - 1)]); };
  for (const Edge& e : r.e1)
    line(os, f, pt(r.u_points, e.u), pt(r.v_points, e.v), "e1", "stroke=\"#1f4e8c\" stroke-width=\"1.5\"");
  for (const Edge& e : r.e2)
    line(os, f, pt(r.u_points, e.u), pt(r.v_points, e.v), "e2",
         "stroke=\"#b35900\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
  line(os, f, g.points.col(r.antipodal_low), g.points.col(r.antipodal_high), "antipodal",
       "stroke=\"green\" stroke-width=\"1\" stroke-dasharray=\"2 2\"");
  points(os, f, g.points);
  unit_bar(os, f);
  os << "</svg>\n";
  return os.str();
}

std::string render_matrix_svg(const ZeroOneMatrix& m) {
  const double cell = std::min(40.0, (kCanvas - 2 * kMargin) / std::max(m.n_rows(), m.n_cols()));
  std::ostringstream os;
  os << header();
  for (int i = m.n_rows(); i >= 1; --i)
    for (int j = 1; j <= m.n_cols(); ++j) {
      const bool one = m.at(i, j);
      os << "<rect class=\"" << (one ? "cell-one" : "cell-zero") << "\" x=\"" << num(kMargin + (j - 1) * cell)
         << "\" y=\"" << num(kMargin + (m.n_rows() - i) * cell) << "\" width=\"" << num(cell)
         << "\" height=\"" << num(cell) << "\" fill=\"" << (one ? "black" : "white")
         << "\" stroke=\"#888888\"/>\n";
    }
  os << "</svg>\n";
  return os.str();
}

}  // namespace prbg
