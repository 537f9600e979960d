#include <random>
#include <set>

#include "doctest.h"
#include "geogrundy/verify.hpp"
#include "json.hpp"

using namespace geogrundy;

namespace {

// Definitions applied literally, pair by pair.
struct Naive {
  bool proper = true, complete = true, grundy = true;
};

Naive naive(const ConflictGraph& g, const EdgeColoring& col) {
  Naive r;
  std::set<std::pair<int, int>> met;
  for (int u = 0; u < g.node_count(); ++u)
    for (int v = 0; v < g.node_count(); ++v)
      if (u != v && g.adjacent(u, v)) {
        if (col.color(u) == col.color(v)) r.proper = false;
        met.insert({col.color(u), col.color(v)});
      }
  std::set<int> used(col.colors.begin(), col.colors.end());
  for (int i : used)
    for (int j : used) r.complete = r.complete && (i >= j || met.count({i, j}));
  for (int u = 0; u < g.node_count(); ++u)
    for (int i = 1; i < col.color(u); ++i) {
      bool seen = false;
      for (int v = 0; v < g.node_count(); ++v) seen = seen || (g.adjacent(u, v) && col.color(v) == i);
      r.grundy = r.grundy && seen;
    }
  return r;
}

EdgeColoring uniform(int n, Criterion c, int color) {
  EdgeColoring col(n, c);
  for (int u = 0; u < col.size(); ++u) col.assign(u, color, Stage::Constructed);
  return col;
}

}  // namespace

TEST_CASE("properness fixtures on convex K4 under Crossing") {
  const auto g = build_conflict_graph(gen_convex(4), Criterion::Crossing);
  auto col = uniform(4, Criterion::Crossing, 1);
  CHECK_FALSE(is_proper(g, col));
  col.assign(Edge(1, 3), 2, Stage::Constructed);
  CHECK(is_proper(g, col));
  CHECK(has_grundy_property(g, col).holds);
}

TEST_CASE("completeness fixtures") {
  const auto g = build_conflict_graph(gen_convex(4), Criterion::Crossing);
  CHECK(is_complete(g, uniform(4, Criterion::Crossing, 1)));
  auto col = uniform(4, Criterion::Crossing, 1);
  col.assign(Edge(0, 2), 2, Stage::Constructed);
  col.assign(Edge(1, 3), 3, Stage::Constructed);
  CHECK_FALSE(is_complete(g, col));
}

TEST_CASE("grundy property witness") {
  const auto g = build_conflict_graph(gen_convex(4), Criterion::Crossing);
  CHECK(has_grundy_property(g, uniform(4, Criterion::Crossing, 1)).holds);
  auto col = uniform(4, Criterion::Crossing, 1);
  col.assign(Edge(0, 1), 2, Stage::Constructed);  // a side edge crosses nothing
  const auto check = has_grundy_property(g, col);
  REQUIRE_FALSE(check.holds);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->lower == 1);
  CHECK(check.witness->higher == 2);
  CHECK(check.witness->edge == edge_index(4, Edge(0, 1)));
}

TEST_CASE("partial or mismatched colourings are rejected") {
  const auto g = build_conflict_graph(gen_convex(4), Criterion::Crossing);
  EdgeColoring partial(4, Criterion::Crossing);
  CHECK_THROWS_AS(is_proper(g, partial), std::invalid_argument);
  CHECK_THROWS_AS(is_complete(g, partial), std::invalid_argument);
  CHECK_THROWS_AS(has_grundy_property(g, partial), std::invalid_argument);
  CHECK_THROWS_AS(is_proper(g, uniform(5, Criterion::Crossing, 1)), std::invalid_argument);
}

TEST_CASE("singleton counts and histogram") {
  EdgeColoring k3(3, Criterion::Intersection);
  for (int u = 0; u < 3; ++u) k3.assign(u, u + 1, Stage::Constructed);
  CHECK(singleton_count(k3) == 3);
  const auto g = build_conflict_graph(gen_convex(3), Criterion::Intersection);
  const auto r = verify(g, k3);
  CHECK(r.grundy());
  CHECK(r.color_count == 3);
  CHECK(r.class_size_histogram == std::map<int, int>{{1, 3}});
}

TEST_CASE("verifier agrees with the literal definitions on random colourings") {
  std::mt19937_64 rng(5);
  const Criterion crits[] = {Criterion::Crossing, Criterion::Intersection, Criterion::Disjointness,
                             Criterion::NonCrossing};
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 4;
    const auto c = crits[trial % 4];
    const auto g = build_conflict_graph(gen_general(n, static_cast<std::uint64_t>(trial)), c);
    const int k = 1 + static_cast<int>(rng() % 6);
    EdgeColoring col(n, c);
    for (int u = 0; u < col.size(); ++u) col.assign(u, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k)), Stage::Constructed);
    const auto expect = naive(g, col);
    const auto r = verify(g, col);
    REQUIRE(r.proper == expect.proper);
    REQUIRE(r.complete == expect.complete);
    REQUIRE(r.grundy_property == expect.grundy);
    if (r.grundy_property) REQUIRE(r.complete);
    REQUIRE(r.first_violation.has_value() == !r.grundy_property);
  }
}

TEST_CASE("abstract graphs verify and report nodes") {
  const std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}};
  const auto g = ConflictGraph::from_pairs(3, path);
  auto col = EdgeColoring::abstract(3);
  col.assign(0, 2, Stage::Constructed);
  col.assign(1, 1, Stage::Constructed);
  col.assign(2, 1, Stage::Constructed);
  const auto r = verify(g, col);
  CHECK_FALSE(r.proper);
  CHECK(r.grundy_property);
  col.assign(0, 3, Stage::Constructed);
  const auto bad = verify(g, col);
  REQUIRE(bad.first_violation.has_value());
  const auto j = nlohmann::json::parse(report_to_json(bad, g));
  CHECK(j["first_violation"].contains("node"));
}

TEST_CASE("report json for geometric graphs names the edge") {
  const auto g = build_conflict_graph(gen_convex(4), Criterion::Crossing);
  auto col = uniform(4, Criterion::Crossing, 1);
  col.assign(Edge(0, 1), 2, Stage::Constructed);
  const auto j = nlohmann::json::parse(report_to_json(verify(g, col), g));
  CHECK(j["first_violation"]["edge"] == nlohmann::json::array({0, 1}));
  CHECK(j["grundy_property"] == false);
}
