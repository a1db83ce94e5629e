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

// Seeded convex point-set generators. Every result is returned in canonical
// order (counter-clockwise from the lexicographically smallest point) and is
// validated with is_strictly_convex.

#ifndef PRBG_GENERATORS_HPP
#define PRBG_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "prbg/geometry.hpp"
#include "prbg/random.hpp"

namespace prbg {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kGeneratorRetries = 64;

namespace detail {

template <class Scalar>
Points2<Scalar> canonical(const Points2<Scalar>& p) {
  return permuted<Scalar>(p, canonical_order<Scalar>(p));
}

template <class Scalar, class Attempt>
Points2<Scalar> with_retries(const char* what, Attempt&& attempt) {
  for (int r = 0; r < kGeneratorRetries; ++r) {
    Points2<Scalar> p = attempt();
    if (p.cols() >= 3 && is_strictly_convex<Scalar>(p)) return canonical<Scalar>(p);
  }
  throw GenerationError(std::string(what) + ": no strictly convex sample after retries");
}

inline void check_n(int n) {
  if (n < 3) throw InputError("a convex point set needs n >= 3");
}

template <class Scalar>
std::vector<Scalar> sorted_uniform(Rng& rng, int count, double lo, double hi) {
  std::vector<Scalar> t(static_cast<std::size_t>(count));
  for (auto& x : t) x = Scalar(rng.uniform(lo, hi));
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace detail

/// n points at sorted random angles on the circle of diameter 1.
template <class Scalar = double>
Points2<Scalar> gen_circle_points(int n, std::uint64_t seed) {
  detail::check_n(n);
  Rng rng(seed);
  return detail::with_retries<Scalar>("circle", [&] {
    const auto th = detail::sorted_uniform<Scalar>(rng, n, 0.0, 2 * std::numbers::pi);
    Points2<Scalar> p(2, n);
    for (int k = 0; k < n; ++k) {
      using std::cos, std::sin;
      p.col(k) << Scalar(0.5) * cos(th[static_cast<std::size_t>(k)]),
          Scalar(0.5) * sin(th[static_cast<std::size_t>(k)]);
    }
    return p;
  });
}

/// Chain p_{k+1} = p_k + (cos t_k, sin t_k) for strictly increasing headings
/// with total turn below pi; closes into a convex polygon with at least n-1
/// unit sides.
template <class Scalar = double>
Points2<Scalar> unit_edge_chain_from_angles(const std::vector<Scalar>& headings) {
  const int n = static_cast<int>(headings.size()) + 1;
  detail::check_n(n);
  for (std::size_t k = 1; k < headings.size(); ++k)
    if (!(headings[k] > headings[k - 1])) throw InputError("chain headings must strictly increase");
  if (!(headings.back() - headings.front() < Scalar(std::numbers::pi)))
    throw InputError("chain headings must turn by less than pi");
  Points2<Scalar> p(2, n);
  p.col(0).setZero();
  for (int k = 1; k < n; ++k) {
    using std::cos, std::sin;
    const Scalar t = headings[static_cast<std::size_t>(k - 1)];
    p.col(k) = p.col(k - 1) + Point2<Scalar>(cos(t), sin(t));
  }
  if (!is_strictly_convex<Scalar>(p)) throw InputError("chain is not strictly convex");
  return detail::canonical<Scalar>(p);
}

template <class Scalar = double>
Points2<Scalar> gen_unit_edge_chain(int n, std::uint64_t seed) {
  detail::check_n(n);
  Rng rng(seed);
  for (int r = 0; r < kGeneratorRetries; ++r) {
    const auto th = detail::sorted_uniform<Scalar>(rng, n - 1, 0.0, std::numbers::pi);
    try {
      return unit_edge_chain_from_angles<Scalar>(th);
    } catch (const InputError&) {
    }
  }
  throw GenerationError("unit-chain: no strictly convex sample after retries");
}

/// Regular n-gon with the given side length, centred at the origin.
template <class Scalar = double>
Points2<Scalar> gen_regular(int n, Scalar side = Scalar(1)) {
  detail::check_n(n);
  if (!(side > Scalar(0))) throw InputError("side must be positive");
  using std::cos, std::sin;
  const Scalar pi = Scalar(std::numbers::pi);
  const Scalar radius = side / (2 * sin(pi / n));
  Points2<Scalar> p(2, n);
  for (int k = 0; k < n; ++k) p.col(k) << radius * cos(2 * pi * k / n), radius * sin(2 * pi * k / n);
  return detail::canonical<Scalar>(p);
}

/// Random angles on an ellipse with semi-axes 0.5 and 0.5 * aspect.
template <class Scalar = double>
Points2<Scalar> gen_ellipse_points(int n, std::uint64_t seed, double aspect = 0.25) {
  detail::check_n(n);
  if (!(aspect > 0)) throw InputError("aspect must be positive");
  Rng rng(seed);
  return detail::with_retries<Scalar>("ellipse", [&] {
    const auto th = detail::sorted_uniform<Scalar>(rng, n, 0.0, 2 * std::numbers::pi);
    Points2<Scalar> p(2, n);
    for (int k = 0; k < n; ++k) {
      using std::cos, std::sin;
      const Scalar t = th[static_cast<std::size_t>(k)];
      p.col(k) << Scalar(0.5) * cos(t), Scalar(0.5 * aspect) * sin(t);
    }
    return p;
  });
}

namespace detail {

/// Upper circular arc through (-half_len, 0), (0, height), (half_len, 0).
template <class Scalar>
struct Arc {
  Scalar half_len, height, radius;
  Arc(Scalar l, Scalar h) : half_len(l), height(h), radius((l * l + h * h) / (2 * h)) {}
  Scalar operator()(Scalar x) const {
    using std::sqrt, std::max;
    return sqrt(max(radius * radius - x * x, Scalar(0))) - (radius - height);
  }
};

}  // namespace detail

/// Two mirrored circular arcs (a lens) with random points on each.
template <class Scalar = double>
Points2<Scalar> gen_lens_points(int n, std::uint64_t seed) {
  detail::check_n(n);
  Rng rng(seed);
  return detail::with_retries<Scalar>("lens", [&] {
    const detail::Arc<Scalar> f(Scalar(1), Scalar(rng.uniform(0.05, 0.5)));
    const int top = rng.uniform_int(std::max(1, n / 3), std::max(1, 2 * n / 3));
    auto xs_top = detail::sorted_uniform<Scalar>(rng, top, -0.999, 0.999);
    auto xs_bot = detail::sorted_uniform<Scalar>(rng, n - top, -0.999, 0.999);
    Points2<Scalar> p(2, n);
    int k = 0;
    for (Scalar x : xs_bot) p.col(k++) << x, -f(x);
    for (auto it = xs_top.rbegin(); it != xs_top.rend(); ++it) p.col(k++) << *it, f(*it);
    return p;
  });
}

/// Unit zig-zag between the two arcs of a lens of half-height in
/// [0.25, 0.45]: consecutive points alternate arcs and are exactly one apart,
/// so the unit distance graph has about n-1 edges crossing the long axis.
template <class Scalar = double>
Points2<Scalar> gen_zigzag_points(int n, std::uint64_t seed) {
  detail::check_n(n);
  Rng rng(seed);
  return detail::with_retries<Scalar>("zigzag", [&] {
    const Scalar h = Scalar(rng.uniform(0.25, 0.45));
    const Scalar l = Scalar(rng.uniform(0.6, 1.0) * n / 2 * 0.9);
    const detail::Arc<Scalar> f(l, h);
    std::vector<Point2<Scalar>> pts;
    Scalar x = -l + Scalar(rng.uniform(0.05, 0.3));
    int side = -1;
    pts.emplace_back(x, side * f(x));
    while (static_cast<int>(pts.size()) < n) {
      const Point2<Scalar> prev = pts.back();
      side = -side;
      auto gap = [&](Scalar t) { return (Point2<Scalar>(t, side * f(t)) - prev).norm() - Scalar(1); };
      Scalar lo = prev.x(), hi = l;
      if (gap(hi) < 0) break;
      for (int it = 0; it < 200; ++it) {
        const Scalar mid = (lo + hi) / 2;
        (gap(mid) < 0 ? lo : hi) = mid;
      }
      x = (lo + hi) / 2;
      pts.emplace_back(x, side * f(x));
    }
    if (static_cast<int>(pts.size()) < n) return Points2<Scalar>(2, 0);
    // Counter-clockwise: lower arc left to right, then upper arc right to left.
    std::vector<Point2<Scalar>> bottom, top;
    for (const auto& q : pts) (q.y() < 0 ? bottom : top).push_back(q);
    auto by_x = [](const Point2<Scalar>& a, const Point2<Scalar>& b) { return a.x() < b.x(); };
    std::sort(bottom.begin(), bottom.end(), by_x);
    std::sort(top.begin(), top.end(), [&](const auto& a, const auto& b) { return by_x(b, a); });
    Points2<Scalar> p(2, n);
    int k = 0;
    for (const auto& q : bottom) p.col(k++) = q;
    for (const auto& q : top) p.col(k++) = q;
    return p;
  });
}

}  // namespace prbg

#endif  // PRBG_GENERATORS_HPP
