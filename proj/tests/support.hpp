#pragma once

// Test-side oracles and generators. Nothing here calls into the library's
// predicates, so the unit tests can compare against independent answers.

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "geogrundy/geometry.hpp"

namespace testing_support {

using geogrundy::Edge;
using geogrundy::Point;

// Parametric segment intersection: p + t*r meets q + u*s with t, u strictly
// inside (0, 1). Solved by Cramer's rule on exact integers.
inline bool segments_cross(Point p, Point p2, Point q, Point q2) {
  using I = __int128;
  const I rx = p2.x - p.x, ry = p2.y - p.y, sx = q2.x - q.x, sy = q2.y - q.y;
  const I qpx = q.x - p.x, qpy = q.y - p.y;
  I den = rx * sy - ry * sx;
  if (den == 0) return false;  // parallel; general position rules out overlap
  I t = qpx * sy - qpy * sx;
  I u = qpx * ry - qpy * rx;
  if (den < 0) den = -den, t = -t, u = -u;
  return 0 < t && t < den && 0 < u && u < den;
}

inline bool edges_cross(const std::vector<Point>& pts, const Edge& e, const Edge& f) {
  if (e.shares_vertex(f)) return false;
  return segments_cross(pts[static_cast<std::size_t>(e.a)], pts[static_cast<std::size_t>(e.b)],
                        pts[static_cast<std::size_t>(f.a)], pts[static_cast<std::size_t>(f.b)]);
}

inline std::vector<Point> to_vector(const geogrundy::PointSet& s) { return {s.points().begin(), s.points().end()}; }

// Area-based collinearity check, written without the library.
inline bool collinear(Point a, Point b, Point c) {
  return static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x) == 0;
}

// Random point sets in general position by plain rejection.
inline std::vector<Point> random_general(int n, std::uint64_t seed, std::int64_t range = 1000) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-range, range);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point p{coord(rng), coord(rng)};
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      ok = pts[i] != p;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) ok = !collinear(pts[i], pts[j], p);
    }
    if (ok) pts.push_back(p);
  }
  return pts;
}

// k distinct edges of K_n chosen uniformly.
inline std::vector<Edge> random_edges(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::set<std::pair<int, int>> chosen;
  std::vector<Edge> out;
  while (static_cast<int>(out.size()) < k) {
    const int u = vertex(rng), v = vertex(rng);
    if (u == v) continue;
    const Edge e(u, v);
    if (chosen.insert({e.a, e.b}).second) out.push_back(e);
  }
  return out;
}

inline std::int64_t choose2(std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace testing_support
