#include <algorithm>
#include <map>

#include "doctest.h"
#include "geogrundy/bounds.hpp"
#include "geogrundy/constructions.hpp"
#include "geogrundy/verify.hpp"
#include "support.hpp"

using namespace geogrundy;
namespace ts = testing_support;

namespace {

std::map<int, std::vector<Edge>> classes_of(const EdgeColoring& col, Stage only) {
  std::map<int, std::vector<Edge>> out;
  const auto edges = all_edges(col.n);
  for (int u = 0; u < col.size(); ++u)
    if (col.stages[static_cast<std::size_t>(u)] == only) out[col.color(u)].push_back(edges[static_cast<std::size_t>(u)]);
  return out;
}

bool oracle_disjoint(const std::vector<Point>& pts, const Edge& e, const Edge& f) {
  return !e.shares_vertex(f) && !ts::edges_cross(pts, e, f);
}

}  // namespace

TEST_CASE("greedy completion") {
  const std::vector<std::pair<int, int>> clique{{0, 1}, {0, 2}, {1, 2}};
  const auto g = ConflictGraph::from_pairs(3, clique);
  const auto col = greedy_complete(g, EdgeColoring::abstract(3));
  CHECK(col.colors == std::vector<int>{1, 2, 3});

  const auto k4 = build_conflict_graph(gen_convex(4), Criterion::Crossing);
  const auto c4 = greedy_complete(k4, EdgeColoring(4, Criterion::Crossing));
  CHECK(c4.color_count() == 2);
  CHECK(verify(k4, c4).grundy());

  // An explicit order must cover every uncoloured node.
  const std::vector<int> partial_order{0, 1};
  CHECK_THROWS(greedy_complete(g, EdgeColoring::abstract(3), partial_order));
  const std::vector<int> reversed{2, 1, 0};
  CHECK(greedy_complete(g, EdgeColoring::abstract(3), reversed).colors == std::vector<int>{3, 2, 1});
}

TEST_CASE("greedy keeps the partial colouring and only adds Grundy-valid classes") {
  for (int n = 5; n <= 9; ++n) {
    const auto s = gen_general(n, static_cast<std::uint64_t>(n));
    const auto g = build_conflict_graph(s, Criterion::Intersection);
    EdgeColoring partial(n, Criterion::Intersection);
    partial.assign(Edge(0, 1), 1, Stage::Constructed);
    partial.assign(Edge(2, 3), 1, Stage::Constructed);
    const auto done = greedy_complete(g, partial);
    CHECK(done.is_total());
    CHECK(done.color(Edge(0, 1)) == 1);
    CHECK(done.color(Edge(2, 3)) == 1);
    CHECK(done.color_count() >= partial.color_count());
    CHECK(verify(g, done).pseudo_grundy());
  }
}

TEST_CASE("circulant edges and disjoint rotations") {
  CHECK(circulant_edges(6, 3).size() == 3);
  CHECK(circulant_edges(7, 2).size() == 7);
  for (int n = 4; n <= 30; ++n) {
    const auto pts = ts::to_vector(gen_convex(n));
    for (int i = 1; 2 * i < n; ++i)
      for (int x = 0; x + i < n; ++x)
        for (int y = x + i + 1; y + i < n; y += i + 1)
          REQUIRE(oracle_disjoint(pts, Edge(x, x + i), Edge(y, y + i)));
  }
}

TEST_CASE("circulant colouring examples") {
  const auto c13 = circulant_coloring(13);
  CHECK(c13.coloring.constructed_color_count() == 27);
  const auto g13 = build_conflict_graph(c13.points, Criterion::Intersection);
  CHECK(is_proper(g13, c13.coloring));
  CHECK(verify(g13, c13.coloring).grundy());

  const auto c4 = circulant_coloring(4);
  const auto& col = c4.coloring;
  CHECK(col.color(Edge(0, 1)) == 1);
  CHECK(col.color(Edge(2, 3)) == 1);
  CHECK(col.color(Edge(1, 2)) == 2);
  CHECK(col.color(Edge(0, 3)) == 2);
  CHECK(col.color(Edge(0, 2)) == 3);
  CHECK(col.color(Edge(1, 3)) == 4);
  CHECK(verify(build_conflict_graph(c4.points, Criterion::Intersection), col).grundy());
}

TEST_CASE("circulant colouring certifies with the lower bound for 4 <= n <= 40") {
  for (int n = 4; n <= 40; ++n) {
    CAPTURE(n);
    const auto c = circulant_coloring(n);
    const auto g = build_conflict_graph(c.points, Criterion::Intersection);
    const auto r = verify(g, c.coloring);
    REQUIRE(r.grundy());
    REQUIRE(r.color_count >= ceil(Rational(n * n, 8) + Rational(n, 4)));
    REQUIRE(r.color_count <= counting_upper_bound(n, Criterion::Intersection));
    REQUIRE(r.singleton_class_count <= n);
  }
}

TEST_CASE("bipartition colouring") {
  CHECK_THROWS_AS(crossing_bipartition_coloring(7), std::invalid_argument);
  for (int n : {8, 9, 12, 16, 20, 32}) {
    CAPTURE(n);
    const auto c = crossing_bipartition_coloring(n);
    const int m = n >= 32 ? 32 : n >= 16 ? 16 : 8;
    REQUIRE(c.coloring.constructed_color_count() == (m * m - 16) / 12);
    REQUIRE(bipartition_constructed_colors(n) == (m * m - 16) / 12);
    const auto g = build_conflict_graph(c.points, Criterion::Crossing);
    const auto r = verify(g, c.coloring);
    REQUIRE(r.pseudo_grundy());
    REQUIRE(r.singleton_class_count <= n);

    // Constructed classes sit on top of the palette.
    int greedy_max = 0, constructed_min = 1 << 30;
    for (int u = 0; u < c.coloring.size(); ++u) {
      if (c.coloring.stages[static_cast<std::size_t>(u)] == Stage::Constructed)
        constructed_min = std::min(constructed_min, c.coloring.color(u));
      else
        greedy_max = std::max(greedy_max, c.coloring.color(u));
    }
    REQUIRE(greedy_max < constructed_min);

    // Consecutive edges of each class (in block order) cross.
    const auto pts = ts::to_vector(c.points);
    for (const auto& [color, edges] : classes_of(c.coloring, Stage::Constructed)) {
      const int blocks = edges.size() == 2 ? 4 : static_cast<int>(edges.size());
      const int s = m / blocks;
      std::vector<std::pair<int, Edge>> ordered;
      for (const auto& e : edges) {
        const int ba = e.a / s, bb = e.b / s;
        ordered.push_back({(bb - ba + blocks) % blocks == 2 ? ba : bb, e});
      }
      std::sort(ordered.begin(), ordered.end());
      for (std::size_t k = 0; k < ordered.size(); ++k) {
        const auto& e = ordered[k].second;
        const auto& f = ordered[(k + 1) % ordered.size()].second;
        REQUIRE(ts::edges_cross(pts, e, f));
      }
    }
  }
}

TEST_CASE("halving-line colouring") {
  for (int n = 5; n <= 30; ++n) {
    CAPTURE(n);
    const auto s = gen_general(n, 100 + static_cast<std::uint64_t>(n));
    const auto col = halving_line_coloring(s);
    const auto g = build_conflict_graph(s, Criterion::Disjointness);
    const auto r = verify(g, col);
    REQUIRE(r.pseudo_grundy());
    REQUIRE(r.color_count >= ceil(Rational((n - 3) * (n - 1), 8)));
    REQUIRE(r.singleton_class_count <= n / 2);
    const int expected = n % 2 ? (n - 1) * (n - 3) / 8 : static_cast<int>(ts::choose2(n / 2));
    REQUIRE(col.constructed_color_count() == expected);

    // The constructed stage on its own already satisfies the Grundy property.
    const auto pts = ts::to_vector(s);
    const auto classes = classes_of(col, Stage::Constructed);
    for (const auto& [j, upper] : classes)
      for (const auto& e : upper)
        for (const auto& [i, lower] : classes) {
          if (i >= j) break;
          REQUIRE(std::any_of(lower.begin(), lower.end(), [&](const Edge& f) { return oracle_disjoint(pts, e, f); }));
        }
  }
  CHECK(halving_line_coloring(gen_convex(8)).constructed_color_count() == 6);
  CHECK(halving_line_coloring(gen_general(9, 1)).constructed_color_count() >= 6);
}

TEST_CASE("triangle colouring") {
  CHECK(triangle_coloring(gen_general(7, 1)).color_count() == 7);
  CHECK(triangle_coloring(gen_general(12, 1)).color_count() == 26);
  CHECK(triangle_coloring(gen_general(10, 1)).color_count() == 19);
  for (int n = 3; n <= 40; ++n) {
    CAPTURE(n);
    const auto s = gen_general(n, static_cast<std::uint64_t>(n) * 3);
    const auto placed = place_decomposition(s);
    REQUIRE(validate_decomposition(placed).valid);
    const auto pts = ts::to_vector(s);
    for (std::size_t i = 0; i < placed.leave.size(); ++i)
      for (std::size_t j = i + 1; j < placed.leave.size(); ++j) REQUIRE_FALSE(ts::edges_cross(pts, placed.leave[i], placed.leave[j]));

    const auto col = triangle_coloring(s);
    const auto r = verify(build_conflict_graph(s, Criterion::NonCrossing), col);
    REQUIRE(r.pseudo_grundy());
    REQUIRE(r.color_count == triangle_color_count(n));
    REQUIRE(r.singleton_class_count <= std::max(0, 3 * n - 6));
    for (auto st : col.stages) REQUIRE(st == Stage::Constructed);
  }
}

TEST_CASE("convex quadruples on compass clusters") {
  // Five points around each of four far-apart centres.
  std::vector<Point> pts;
  const Point centres[] = {{0, 10000}, {10000, 0}, {0, -10000}, {-10000, 0}};
  const Point offsets[] = {{0, 0}, {37, 11}, {-23, 41}, {13, -29}, {-31, -17}};
  for (const auto& c : centres)
    for (const auto& o : offsets) pts.push_back({c.x + o.x, c.y + o.y});
  const PointSet s(pts);
  const auto quad = find_convex_quadruple(s, 5);
  CHECK(quad.q == 5);
  CHECK(certify_quadruple(s, quad));
  for (const auto& part : quad.parts) {
    REQUIRE(part.size() == 5);
    const int cluster = part.front() / 5;
    for (int v : part) CHECK(v / 5 == cluster);
  }
}

TEST_CASE("certify_quadruple rejects bad quadruples") {
  const PointSet s({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 4}, {1, 5}, {9, 6}, {4, 9}});
  ConvexQuadruple good;
  good.q = 1;
  good.parts = {std::vector<int>{0}, {1}, {2}, {3}};
  CHECK(certify_quadruple(s, good));
  ConvexQuadruple overlapping = good;
  overlapping.parts[2] = {0};
  CHECK_FALSE(certify_quadruple(s, overlapping));
  ConvexQuadruple wrong_order = good;
  std::swap(wrong_order.parts[1], wrong_order.parts[2]);  // a1a3 is now a side, not a diagonal
  CHECK_FALSE(certify_quadruple(s, wrong_order));
}

TEST_CASE("transversal colouring") {
  for (auto [n, seed] : {std::pair{80, 7ULL}, {100, 1ULL}}) {
    CAPTURE(n);
    const auto s = gen_general(n, seed);
    const auto quad = find_convex_quadruple(s);
    REQUIRE(quad.q == n / 20);
    REQUIRE(certify_quadruple(s, quad));
    const auto pts = ts::to_vector(s);
    for (int a1 : quad.parts[0])
      for (int a3 : quad.parts[2])
        for (int a2 : quad.parts[1])
          for (int a4 : quad.parts[3]) REQUIRE(ts::edges_cross(pts, Edge(a1, a3), Edge(a2, a4)));
    for (auto c : {Criterion::Crossing, Criterion::Intersection}) {
      const auto col = transversal_coloring(s, c, quad);
      REQUIRE(col.constructed_color_count() == n * n / 400);
      const auto r = verify(build_conflict_graph(s, c), col);
      REQUIRE(r.pseudo_grundy());
      REQUIRE(r.singleton_class_count <= n);
    }
  }
  CHECK_THROWS_AS(transversal_coloring(gen_general(40, 1), Criterion::Disjointness), std::invalid_argument);
}

TEST_CASE("constructions are deterministic") {
  CHECK(coloring_to_json(circulant_coloring(11).coloring) == coloring_to_json(circulant_coloring(11).coloring));
  CHECK(coloring_to_json(crossing_bipartition_coloring(16).coloring) ==
        coloring_to_json(crossing_bipartition_coloring(16).coloring));
  const auto s = gen_general(23, 9);
  CHECK(coloring_to_json(halving_line_coloring(s)) == coloring_to_json(halving_line_coloring(s)));
  CHECK(coloring_to_json(triangle_coloring(s)) == coloring_to_json(triangle_coloring(s)));
}
