#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace geogrundy {

/// Largest admissible |coordinate|. Keeps every orientation determinant
/// (and differences of them) inside a signed 128-bit integer.
inline constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { CW, Collinear, CCW };

/// Sign of det(q - p, r - p), computed exactly.
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Canonical edge of K_n: vertex indices with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  Edge() = default;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool shares_vertex(const Edge& o) const { return a == o.a || a == o.b || b == o.a || b == o.b; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Number of edges of K_n.
inline int edge_count(int n) { return n * (n - 1) / 2; }

/// Position of e in the lexicographic enumeration of K_n's edges.
inline int edge_index(int n, const Edge& e) { return e.a * n - e.a * (e.a + 1) / 2 + (e.b - e.a - 1); }

/// All edges of K_n in lexicographic (a, b) order.
std::vector<Edge> all_edges(int n);

enum class SegmentRelation { SharedEndpoint, Crossing, Disjoint };

const char* to_string(SegmentRelation r);

/// An ordered set of integer points in general position.
///
/// Construction validates the coordinate bound, distinctness, and the
/// absence of collinear triples; a violation throws std::invalid_argument.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
  std::span<const Point> points() const { return points_; }

  /// True iff every point is a vertex of the convex hull.
  bool in_convex_position() const;

  /// Relation between two distinct edges drawn as straight segments.
  SegmentRelation relation(const Edge& e, const Edge& f) const;

 private:
  std::vector<Point> points_;
};

SegmentRelation segment_relation(const PointSet& s, const Edge& e, const Edge& f);

/// Four points are in convex position iff none lies inside the triangle
/// spanned by the other three.
bool in_convex_position(const Point& a, const Point& b, const Point& c, const Point& d);

/// n points on a large circle, snapped to the integer grid, in clockwise order.
PointSet gen_convex(int n);

/// n uniformly drawn grid points in [0, grid)^2, re-drawing any point that
/// would create a duplicate or a collinear triple. Deterministic per seed.
PointSet gen_general(int n, std::uint64_t seed, std::int64_t grid = 1'000'000);

struct HalvingLine {
  int a = 0;
  int b = 0;
  std::vector<int> left;   // strictly counter-clockwise of a->b
  std::vector<int> right;  // strictly clockwise of a->b
};

/// Lexicographically smallest pair (a, b) whose line halves the remaining points.
HalvingLine halving_line(const PointSet& s);

/// Point file: first line n, then n lines "x y".
PointSet read_points(std::istream& in);
void write_points(std::ostream& out, const PointSet& s);
std::string points_to_string(const PointSet& s);

}  // namespace geogrundy
