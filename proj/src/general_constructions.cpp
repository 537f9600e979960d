#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "geogrundy/constructions.hpp"

namespace geogrundy {

namespace {

void color_complete_graph_on(EdgeColoring& col, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  int c = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) col.assign(Edge(vertices[i], vertices[j]), ++c, Stage::Constructed);
}

bool crossing_free(const PointSet& s, const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (s.relation(edges[i], edges[j]) == SegmentRelation::Crossing) return false;
  return true;
}

}  // namespace

EdgeColoring halving_line_coloring(const PointSet& s) {
  const int n = s.size();
  if (n < 5) throw std::invalid_argument("halving_line_coloring: n must be at least 5");
  const auto h = halving_line(s);
  // The larger strict side; ties go to the clockwise side.
  auto big = h.right.size() >= h.left.size() ? h.right : h.left;
  auto small = h.right.size() >= h.left.size() ? h.left : h.right;
  small.push_back(h.a);
  // For even n, b evens out the sides. For odd n the sides are already equal
  // once a joins the smaller one; b's edges are left to the greedy stage.
  if (n % 2 == 0) big.push_back(h.b);

  EdgeColoring col(n, Criterion::Disjointness);
  color_complete_graph_on(col, big);
  color_complete_graph_on(col, small);
  const auto g = build_conflict_graph(s, Criterion::Disjointness);
  return greedy_complete(g, std::move(col));
}

Decomposition place_decomposition(const PointSet& s) {
  const int n = s.size();
  const auto d = hanani_decompose(n);

  // Points from left to right (ties by y).
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return s[i] < s[j]; });

  // slot[label] = position in the left-to-right order.
  std::vector<int> slot(static_cast<std::size_t>(n));
  std::iota(slot.begin(), slot.end(), 0);
  switch (d.kind) {
    case LeaveKind::Empty:
    case LeaveKind::Tripole:  // star 0-{1,2,3}, then {4,5}, {6,7}, ...
      break;
    case LeaveKind::PerfectMatching: {
      int next = 0;
      for (const auto& e : d.leave) {
        slot[static_cast<std::size_t>(e.a)] = next++;
        slot[static_cast<std::size_t>(e.b)] = next++;
      }
      break;
    }
    case LeaveKind::FourCycle: {
      // The leave is 0-1-2-3-0. Walk the first four points in the first
      // order whose closed tour does not cross itself.
      static constexpr std::array<std::array<int, 4>, 3> kTours{{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}}};
      bool placed = false;
      for (const auto& tour : kTours) {
        std::vector<Edge> cycle;
        for (int i = 0; i < 4; ++i)
          cycle.emplace_back(order[static_cast<std::size_t>(tour[i])], order[static_cast<std::size_t>(tour[(i + 1) % 4])]);
        if (!crossing_free(s, cycle)) continue;
        for (int i = 0; i < 4; ++i) slot[static_cast<std::size_t>(i)] = tour[i];
        placed = true;
        break;
      }
      if (!placed) throw std::logic_error("place_decomposition: no plane 4-cycle on four points");
      break;
    }
  }

  auto point_of = [&](int label) { return order[static_cast<std::size_t>(slot[static_cast<std::size_t>(label)])]; };
  Decomposition placed{n, {}, {}, d.kind};
  for (const auto& t : d.triangles) {
    Triangle u{point_of(t[0]), point_of(t[1]), point_of(t[2])};
    std::sort(u.begin(), u.end());
    placed.triangles.push_back(u);
  }
  for (const auto& e : d.leave) placed.leave.emplace_back(point_of(e.a), point_of(e.b));
  std::sort(placed.triangles.begin(), placed.triangles.end());
  std::sort(placed.leave.begin(), placed.leave.end());
  if (!crossing_free(s, placed.leave)) throw std::logic_error("place_decomposition: leave drawing crosses itself");
  return placed;
}

EdgeColoring triangle_coloring(const PointSet& s) {
  if (s.size() < 3) throw std::invalid_argument("triangle_coloring: n must be at least 3");
  const auto d = place_decomposition(s);
  EdgeColoring col(s.size(), Criterion::NonCrossing);
  int c = 0;
  for (const auto& t : d.triangles) {
    ++c;
    col.assign(Edge(t[0], t[1]), c, Stage::Constructed);
    col.assign(Edge(t[0], t[2]), c, Stage::Constructed);
    col.assign(Edge(t[1], t[2]), c, Stage::Constructed);
  }
  for (const auto& e : d.leave) col.assign(e, ++c, Stage::Constructed);
  return col;
}

EdgeColoring transversal_coloring(const PointSet& s, Criterion c, const ConvexQuadruple& quad) {
  if (c != Criterion::Crossing && c != Criterion::Intersection)
    throw std::invalid_argument("transversal_coloring: criterion must be crossing or intersection");
  const auto& [a1, a2, a3, a4] = quad.parts;
  EdgeColoring col(s.size(), c);
  auto color_bipartite = [&col](const std::vector<int>& left, const std::vector<int>& right) {
    int k = 0;
    for (int u : left)
      for (int v : right) col.assign(Edge(u, v), ++k, Stage::Constructed);
  };
  color_bipartite(a1, a3);
  color_bipartite(a2, a4);
  const auto g = build_conflict_graph(s, c);
  return greedy_complete(g, std::move(col));
}

EdgeColoring transversal_coloring(const PointSet& s, Criterion c) {
  return transversal_coloring(s, c, find_convex_quadruple(s));
}

}  // namespace geogrundy
