#include <algorithm>
#include <stdexcept>
#include <vector>

#include "geogrundy/constructions.hpp"

namespace geogrundy {

std::vector<Edge> circulant_edges(int n, int offset) {
  if (offset < 1 || 2 * offset > n) throw std::invalid_argument("circulant_edges: offset out of range");
  std::vector<Edge> out;
  const int count = 2 * offset == n ? n / 2 : n;
  for (int x = 0; x < count; ++x) out.emplace_back(x, (x + offset) % n);
  return out;
}

Construction circulant_coloring(int n) {
  if (n < 3) throw std::invalid_argument("circulant_coloring: n must be at least 3");
  PointSet points = gen_convex(n);
  const auto g = build_conflict_graph(points, Criterion::Intersection);
  EdgeColoring col(n, Criterion::Intersection);

  int base = 0;
  for (int i = 1; 2 * i <= n; ++i) {
    if (2 * i == n) {
      // C_n({n/2}) has only n/2 edges (the diameters); each gets its own colour.
      for (int l = 0; l < i; ++l) col.assign(Edge(l, l + i), base + l + 1, Stage::Constructed);
      base += i;
      continue;
    }
    // Starting edge {l, l + i} and its rotations by multiples of i + 1 that
    // stay below n (no wrap-around).
    for (int l = 0; l <= i; ++l)
      for (int x = l; x + i < n; x += i + 1) col.assign(Edge(x, x + i), base + l + 1, Stage::Constructed);
    base += i + 1;
  }
  return {std::move(points), greedy_complete(g, std::move(col))};
}

namespace {

int largest_power_of_two_at_most(int n) {
  int m = 1;
  while (2 * m <= n) m *= 2;
  return m;
}

// Merges a greedy class with its neighbour below (class 1 with class 2) while
// some constructed edge fails to meet it. Merging two adjacent classes keeps
// the greedy part pseudo-Grundy: every requirement on the merged class was
// already met by one of its two halves.
int settle_greedy_classes(const ConflictGraph& g, EdgeColoring& col, const std::vector<int>& constructed,
                          int classes) {
  auto misses = [&](int c) {
    return std::any_of(constructed.begin(), constructed.end(), [&](int u) {
      bool hit = false;
      g.for_each_neighbor(u, [&](int v) {
        hit = hit || (col.stages[static_cast<std::size_t>(v)] == Stage::GreedyCompleted && col.color(v) == c);
      });
      return !hit;
    });
  };
  for (int c = classes; c >= 1 && classes >= 2;) {
    if (!misses(c)) {
      --c;
      continue;
    }
    const int upper = std::max(c, 2);
    for (int u = 0; u < col.size(); ++u)
      if (col.stages[static_cast<std::size_t>(u)] == Stage::GreedyCompleted && col.color(u) >= upper)
        col.colors[static_cast<std::size_t>(u)] -= 1;
    --classes;
    c = std::min(upper - 1, classes);
  }
  return classes;
}

}  // namespace

int bipartition_constructed_colors(int n) {
  if (n < 8) throw std::invalid_argument("crossing_bipartition_coloring: n must be at least 8");
  const int m = largest_power_of_two_at_most(n);
  int total = 0;
  for (int s = m / 4; s >= 2; s /= 2) total += s * s;
  return total;
}

Construction crossing_bipartition_coloring(int n) {
  const int constructed_total = bipartition_constructed_colors(n);
  const int m = largest_power_of_two_at_most(n);
  PointSet points = gen_convex(n);
  const auto g = build_conflict_graph(points, Criterion::Crossing);
  EdgeColoring col(n, Criterion::Crossing);

  // rank[u] = 0 for the biggest colour; level 1 (largest blocks) ranks first.
  std::vector<int> rank(static_cast<std::size_t>(col.size()), -1);
  int next_rank = 0;
  for (int s = m / 4; s >= 2; s /= 2) {
    const int blocks = m / s;
    // With four blocks the pairs (1,3) and (3,1) coincide.
    const int pairs = blocks == 4 ? 2 : blocks;
    for (int t = 0; t < pairs; ++t)
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
          const int u = edge_index(n, Edge(t * s + a, ((t + 2) % blocks) * s + b));
          if (rank[static_cast<std::size_t>(u)] >= 0) throw std::logic_error("bipartition: edge coloured twice");
          rank[static_cast<std::size_t>(u)] = next_rank + a * s + b;
        }
    next_rank += s * s;
  }

  std::vector<int> constructed, rest;
  for (int u = 0; u < col.size(); ++u) (rank[static_cast<std::size_t>(u)] >= 0 ? constructed : rest).push_back(u);
  greedy_fill(g, col, rest);
  int classes = 0;
  for (int u : rest) classes = std::max(classes, col.color(u));
  classes = settle_greedy_classes(g, col, constructed, classes);
  for (int u : constructed) col.assign(u, classes + constructed_total - rank[static_cast<std::size_t>(u)], Stage::Constructed);
  return {std::move(points), std::move(col)};
}

}  // namespace geogrundy
