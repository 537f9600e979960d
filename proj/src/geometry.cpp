#include "geogrundy/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace geogrundy {

namespace {

using Wide = __int128;

Wide cross(const Point& p, const Point& q, const Point& r) {
  return static_cast<Wide>(q.x - p.x) * (r.y - p.y) - static_cast<Wide>(q.y - p.y) * (r.x - p.x);
}

bool within_bound(const Point& p) {
  return p.x >= -kCoordinateBound && p.x <= kCoordinateBound && p.y >= -kCoordinateBound &&
         p.y <= kCoordinateBound;
}

// Strict convex hull size (collinear points are not hull vertices).
std::size_t hull_vertex_count(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  if (pts.size() < 3) return pts.size();
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  return k - 1;
}

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Wide d = cross(p, q, r);
  if (d > 0) return Orientation::CCW;
  if (d < 0) return Orientation::CW;
  return Orientation::Collinear;
}

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count(n)));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

const char* to_string(SegmentRelation r) {
  switch (r) {
    case SegmentRelation::SharedEndpoint: return "shared-endpoint";
    case SegmentRelation::Crossing: return "crossing";
    case SegmentRelation::Disjoint: return "disjoint";
  }
  return "?";
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  const auto n = points_.size();
  for (const auto& p : points_)
    if (!within_bound(p)) throw std::invalid_argument("point coordinate exceeds 2^30");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points_[i] == points_[j]) throw std::invalid_argument("duplicate point");
      for (std::size_t k = j + 1; k < n; ++k)
        if (orientation(points_[i], points_[j], points_[k]) == Orientation::Collinear)
          throw std::invalid_argument("three collinear points (indices " + std::to_string(i) + ", " +
                                      std::to_string(j) + ", " + std::to_string(k) + ")");
    }
}

bool PointSet::in_convex_position() const { return hull_vertex_count(points_) == points_.size(); }

SegmentRelation PointSet::relation(const Edge& e, const Edge& f) const {
  if (e.shares_vertex(f)) return SegmentRelation::SharedEndpoint;
  const Point& p = (*this)[e.a];
  const Point& q = (*this)[e.b];
  const Point& r = (*this)[f.a];
  const Point& s = (*this)[f.b];
  // General position: no orientation below is Collinear.
  const bool split_f = orientation(p, q, r) != orientation(p, q, s);
  const bool split_e = orientation(r, s, p) != orientation(r, s, q);
  return split_f && split_e ? SegmentRelation::Crossing : SegmentRelation::Disjoint;
}

SegmentRelation segment_relation(const PointSet& s, const Edge& e, const Edge& f) {
  if (e == f) throw std::invalid_argument("segment_relation: identical edges");
  return s.relation(e, f);
}

bool in_convex_position(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto inside = [](const Point& p, const Point& u, const Point& v, const Point& w) {
    const auto o1 = orientation(u, v, p);
    const auto o2 = orientation(v, w, p);
    const auto o3 = orientation(w, u, p);
    return o1 == o2 && o2 == o3;
  };
  return !inside(a, b, c, d) && !inside(b, a, c, d) && !inside(c, a, b, d) && !inside(d, a, b, c);
}

PointSet gen_convex(int n) {
  if (n < 3) throw std::invalid_argument("gen_convex: n must be at least 3");
  constexpr double kRadius = static_cast<double>(std::int64_t{1} << 26);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta = std::numbers::pi / 2 - 2 * std::numbers::pi * i / n;
    pts.push_back({std::llround(kRadius * std::cos(theta)), std::llround(kRadius * std::sin(theta))});
  }
  // Snapping must not break strict convexity: every consecutive turn is clockwise.
  for (int i = 0; i < n; ++i)
    if (orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) != Orientation::CW)
      throw std::runtime_error("gen_convex: n too large for the snapping radius");
  return PointSet(std::move(pts));
}

PointSet gen_general(int n, std::uint64_t seed, std::int64_t grid) {
  if (n < 3) throw std::invalid_argument("gen_general: n must be at least 3");
  if (grid < 2 || grid > kCoordinateBound) throw std::invalid_argument("gen_general: bad grid size");
  constexpr int kRetryBudget = 10'000;
  std::mt19937_64 rng(seed);
  const auto range = static_cast<std::uint64_t>(grid);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int attempts = 0;
    for (;;) {
      if (++attempts > kRetryBudget)
        throw std::runtime_error("gen_general: retry budget exhausted; grid too small for n");
      const Point p{static_cast<std::int64_t>(rng() % range), static_cast<std::int64_t>(rng() % range)};
      bool ok = true;
      for (std::size_t j = 0; ok && j < pts.size(); ++j) {
        if (pts[j] == p) ok = false;
        for (std::size_t k = j + 1; ok && k < pts.size(); ++k)
          if (orientation(pts[j], pts[k], p) == Orientation::Collinear) ok = false;
      }
      if (ok) {
        pts.push_back(p);
        break;
      }
    }
  }
  return PointSet(std::move(pts));
}

HalvingLine halving_line(const PointSet& s) {
  const int n = s.size();
  if (n < 4) throw std::invalid_argument("halving_line: needs at least 4 points");
  const int small = (n - 2) / 2;  // even: both sides; odd: the smaller side
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      HalvingLine h{a, b, {}, {}};
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        (orientation(s[a], s[b], s[c]) == Orientation::CCW ? h.left : h.right).push_back(c);
      }
      const auto lo = std::min(h.left.size(), h.right.size());
      if (static_cast<int>(lo) == small) return h;
    }
  throw std::logic_error("halving_line: none found (input not in general position?)");
}

PointSet read_points(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 0) throw std::invalid_argument("point file: missing or invalid count");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    Point p;
    if (!(in >> p.x >> p.y)) throw std::invalid_argument("point file: expected " + std::to_string(n) + " points");
    pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

void write_points(std::ostream& out, const PointSet& s) {
  out << s.size() << '\n';
  for (const auto& p : s.points()) out << p.x << ' ' << p.y << '\n';
}

std::string points_to_string(const PointSet& s) {
  std::ostringstream os;
  write_points(os, s);
  return os.str();
}

}  // namespace geogrundy
