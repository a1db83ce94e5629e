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

// Planar predicates and convex point sets. Point blocks are 2 x n Eigen
// matrices, one column per point; every sign decision goes through
// orientation() or angle_class() with a relative tolerance.

#ifndef PRBG_GEOMETRY_HPP
#define PRBG_GEOMETRY_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prbg/ordered_bipartite.hpp"

namespace prbg {

template <class Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

template <class Scalar>
using Points2 = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

/// Default relative tolerance of the sign predicates.
inline constexpr double kTolerance = 1e-9;

/// Coincident points, points on a splitting line and similar degeneracies.
class DegenerateGeometry : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class Scalar>
Scalar cross2(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// +1 for a strict left turn a -> b -> c, -1 for a strict right turn, 0 when
/// |cross| <= tau * |b - a| * |c - b|.
template <class Scalar>
int orientation(const Point2<Scalar>& a, const Point2<Scalar>& b, const Point2<Scalar>& c,
                Scalar tau = Scalar(kTolerance)) {
  const Point2<Scalar> x = b - a;
  const Point2<Scalar> y = c - b;
  const Scalar cr = cross2<Scalar>(x, y);
  const Scalar slack = tau * x.norm() * y.norm();
  if (cr > slack) return 1;
  if (cr < -slack) return -1;
  return 0;
}

enum class AngleClass { acute, right, obtuse };

inline std::string to_string(AngleClass a) {
  switch (a) {
    case AngleClass::acute: return "acute";
    case AngleClass::right: return "right";
    default: return "obtuse";
  }
}

/// Classifies the angle at b between rays b->a and b->c.
template <class Scalar>
AngleClass angle_class(const Point2<Scalar>& a, const Point2<Scalar>& b, const Point2<Scalar>& c,
                       Scalar tau = Scalar(kTolerance)) {
  const Point2<Scalar> x = a - b;
  const Point2<Scalar> y = c - b;
  const Scalar nx = x.norm(), ny = y.norm();
  if (nx == Scalar(0) || ny == Scalar(0)) throw DegenerateGeometry("angle with coincident points");
  const Scalar d = x.dot(y);
  const Scalar slack = tau * nx * ny;
  if (d > slack) return AngleClass::acute;
  if (d >= -slack) return AngleClass::right;
  return AngleClass::obtuse;
}

template <class Scalar>
bool is_acute(const Point2<Scalar>& a, const Point2<Scalar>& b, const Point2<Scalar>& c,
              Scalar tau = Scalar(kTolerance)) {
  return angle_class<Scalar>(a, b, c, tau) == AngleClass::acute;
}

/// All consecutive turns strict and of one sign, winding exactly once.
/// Throws InputError for fewer than three points.
template <class Scalar>
bool is_strictly_convex(const Points2<Scalar>& p, Scalar tau = Scalar(kTolerance)) {
  const Eigen::Index n = p.cols();
  if (n < 3) throw InputError("convexity needs at least 3 points");
  int sign = 0;
  Scalar turning = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Point2<Scalar> a = p.col(k), b = p.col((k + 1) % n), c = p.col((k + 2) % n);
    const int s = orientation<Scalar>(a, b, c, tau);
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
    using std::atan2;
    const Point2<Scalar> x = b - a, y = c - b;
    turning += atan2(cross2<Scalar>(x, y), x.dot(y));
  }
  using std::abs;
  // A star polygon turns the same way at every vertex but winds more than once.
  return abs(abs(turning) - Scalar(2 * std::numbers::pi)) < Scalar(1e-6);
}

template <class Scalar>
Scalar signed_area(const Points2<Scalar>& p) {
  Scalar a = 0;
  const Eigen::Index n = p.cols();
  for (Eigen::Index k = 0; k < n; ++k)
    a += cross2<Scalar>(p.col(k), p.col((k + 1) % n));
  return a / 2;
}

/// Permutation that lists a polygon counter-clockwise starting at its
/// lexicographically smallest point: result[k] = input index of position k.
template <class Scalar>
std::vector<int> canonical_order(const Points2<Scalar>& p) {
  const int n = static_cast<int>(p.cols());
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k;
  if (n == 0) return order;
  if (signed_area<Scalar>(p) < 0) std::reverse(order.begin(), order.end());
  auto less = [&](int a, int b) {
    return p(0, a) < p(0, b) || (p(0, a) == p(0, b) && p(1, a) < p(1, b));
  };
  auto first = std::min_element(order.begin(), order.end(), less);
  std::rotate(order.begin(), first, order.end());
  return order;
}

template <class Scalar>
Points2<Scalar> permuted(const Points2<Scalar>& p, const std::vector<int>& order) {
  Points2<Scalar> out(2, static_cast<Eigen::Index>(order.size()));
  for (std::size_t k = 0; k < order.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = p.col(order[k]);
  return out;
}

/// Strictly convex point sequence, stored counter-clockwise from the
/// lexicographically smallest point.
template <class Scalar>
class ConvexPointSet {
 public:
  /// Reorders to canonical form; throws InputError unless strictly convex.
  explicit ConvexPointSet(const Points2<Scalar>& points, Scalar tau = Scalar(kTolerance))
      : order_(canonical_order<Scalar>(points)), points_(permuted<Scalar>(points, order_)) {
    if (!is_strictly_convex<Scalar>(points_, tau))
      throw InputError("point set is not in strictly convex position");
  }

  const Points2<Scalar>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.cols()); }
  Point2<Scalar> operator[](int k) const { return points_.col(k); }
  /// Input index of canonical position k.
  const std::vector<int>& source_index() const { return order_; }

 private:
  std::vector<int> order_;
  Points2<Scalar> points_;
};

struct AntipodalPair {
  int i = 0;  ///< smaller index
  int j = 0;
  friend constexpr auto operator<=>(const AntipodalPair&, const AntipodalPair&) = default;
};

/// Rotating calipers over a counter-clockwise strictly convex polygon. For
/// every edge the farthest vertex (and a parallel twin within tolerance) pairs
/// with both edge endpoints. Sorted, duplicate free.
template <class Scalar>
std::vector<AntipodalPair> antipodal_pairs(const Points2<Scalar>& p, Scalar tau = Scalar(kTolerance)) {
  const int n = static_cast<int>(p.cols());
  if (n < 2) return {};
  if (n == 2) return {{0, 1}};
  auto height = [&](int e, int k) {  // twice the triangle area on edge e
    const Point2<Scalar> a = p.col(e), b = p.col((e + 1) % n);
    return cross2<Scalar>(b - a, p.col(k % n) - a);
  };
  Scalar scale = 0;
  for (int k = 0; k < n; ++k) scale = std::max<Scalar>(scale, p.col(k).norm());
  std::vector<AntipodalPair> out;
  auto add = [&](int a, int b) {
    a %= n, b %= n;
    if (a != b) out.push_back({std::min(a, b), std::max(a, b)});
  };
  int j = 1;
  for (int e = 0; e < n; ++e) {
    if (j < e + 1) j = e + 1;
    while (height(e, j + 1) > height(e, j)) ++j;
    const Scalar edge_len = (p.col((e + 1) % n) - p.col(e)).norm();
    const Scalar slack = tau * edge_len * std::max<Scalar>(scale, Scalar(1));
    add(e, j);
    add(e + 1, j);
    // A vertex within tolerance of the maximum on either side is a parallel twin.
    for (int twin : {j - 1, j + 1}) {
      const int t = (twin + n) % n;
      if (t == e || t == (e + 1) % n) continue;
      if (height(e, t) >= height(e, j) - slack) {
        add(e, t);
        add(e + 1, t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class Scalar>
std::vector<AntipodalPair> antipodal_pairs(const ConvexPointSet<Scalar>& c, Scalar tau = Scalar(kTolerance)) {
  return antipodal_pairs<Scalar>(c.points(), tau);
}

/// Two chains cut off by an antipodal pair (low < high in canonical order).
struct AntipodalSplit {
  int low = 0;
  int high = 0;
  std::vector<int> ccw_side;  ///< strict side low+1 .. high-1
  std::vector<int> cw_side;   ///< strict side low-1, low-2, .. high+1 (cyclic)
  /// U-part: ccw_side then high. Index k (1-based) is u_k.
  std::vector<int> u_points;
  /// V-part: low then cw_side. Index k (1-based) is v_k.
  std::vector<int> v_points;
};

/// Throws DegenerateGeometry if a non-pair point lies within tolerance of the
/// line through the pair, InputError on a bad pair.
template <class Scalar>
AntipodalSplit split_at_antipodal(const Points2<Scalar>& p, AntipodalPair pair,
                                  Scalar tau = Scalar(kTolerance)) {
  const int n = static_cast<int>(p.cols());
  if (pair.i < 0 || pair.j >= n || pair.i >= pair.j) throw InputError("invalid antipodal pair");
  AntipodalSplit s;
  s.low = pair.i;
  s.high = pair.j;
  for (int k = s.low + 1; k < s.high; ++k) s.ccw_side.push_back(k);
  for (int k = s.low - 1 + n; k > s.high; --k) s.cw_side.push_back(k % n);
  const Point2<Scalar> a = p.col(s.low), b = p.col(s.high);
  for (int k = 0; k < n; ++k) {
    if (k == s.low || k == s.high) continue;
    if (orientation<Scalar>(a, b, p.col(k), tau) == 0)
      throw DegenerateGeometry("point " + std::to_string(k) + " lies on the antipodal line");
  }
  s.u_points = s.ccw_side;
  s.u_points.push_back(s.high);
  s.v_points.push_back(s.low);
  s.v_points.insert(s.v_points.end(), s.cw_side.begin(), s.cw_side.end());
  return s;
}

/// Pair minimising | |U| - |V| |, ties to the smallest (i, j).
inline AntipodalPair choose_balanced_pair(const std::vector<AntipodalPair>& pairs, int n) {
  if (pairs.empty()) throw InputError("no antipodal pairs");
  auto key = [n](const AntipodalPair& q) { return std::abs(2 * (q.j - q.i) - n); };
  return *std::min_element(pairs.begin(), pairs.end(), [&](const AntipodalPair& a, const AntipodalPair& b) {
    return std::pair(key(a), a) < std::pair(key(b), b);
  });
}

}  // namespace prbg

#endif  // PRBG_GEOMETRY_HPP
