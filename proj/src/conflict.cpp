#include "geogrundy/conflict.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace geogrundy {

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::Crossing: return "crossing";
    case Criterion::Intersection: return "intersection";
    case Criterion::Disjointness: return "disjointness";
    case Criterion::NonCrossing: return "noncrossing";
  }
  return "?";
}

Criterion parse_criterion(std::string_view name) {
  for (auto c : {Criterion::Crossing, Criterion::Intersection, Criterion::Disjointness, Criterion::NonCrossing})
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown criterion '" + std::string(name) + "'");
}

bool adjacent(SegmentRelation r, Criterion c) {
  switch (c) {
    case Criterion::Crossing: return r == SegmentRelation::Crossing;
    case Criterion::Intersection: return r != SegmentRelation::Disjoint;
    case Criterion::Disjointness: return r == SegmentRelation::Disjoint;
    case Criterion::NonCrossing: return r != SegmentRelation::Crossing;
  }
  return false;
}

bool adjacent(const PointSet& s, const Edge& e, const Edge& f, Criterion c) {
  return adjacent(segment_relation(s, e, f), c);
}

ConflictGraph ConflictGraph::from_pairs(int nodes, std::span<const std::pair<int, int>> pairs) {
  if (nodes < 0) throw std::invalid_argument("from_pairs: negative node count");
  ConflictGraph g;
  g.nodes_ = nodes;
  g.dense_.emplace(nodes);
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= nodes || v >= nodes || u == v)
      throw std::invalid_argument("from_pairs: bad pair");
    g.dense_->set(u, v);
    g.dense_->set(v, u);
  }
  return g;
}

bool ConflictGraph::adjacent(int u, int v) const {
  if (u == v) return false;
  if (dense_) return dense_->test(u, v);
  return geogrundy::adjacent(points_->relation(edge(u), edge(v)), *criterion_);
}

int ConflictGraph::degree(int u) const {
  if (dense_) {
    int d = 0;
    for (auto w : dense_->row(u)) d += std::popcount(w);
    return d;
  }
  int d = 0;
  for_each_neighbor(u, [&](int) { ++d; });
  return d;
}

std::int64_t ConflictGraph::adjacent_pair_count() const {
  std::int64_t total = 0;
  for (int u = 0; u < nodes_; ++u) total += degree(u);
  return total / 2;
}

ConflictGraph build_conflict_graph(const PointSet& s, Criterion c) {
  ConflictGraph g;
  g.vertices_ = s.size();
  g.criterion_ = c;
  g.edges_ = all_edges(s.size());
  g.nodes_ = static_cast<int>(g.edges_.size());
  if (s.size() > ConflictGraph::kDenseVertexLimit) {
    g.points_ = s;
    return g;
  }
  BitMatrix m(g.nodes_);
  for (int u = 0; u < g.nodes_; ++u)
    for (int v = u + 1; v < g.nodes_; ++v)
      if (adjacent(s.relation(g.edges_[u], g.edges_[v]), c)) {
        m.set(u, v);
        m.set(v, u);
      }
  g.dense_ = std::move(m);
  return g;
}

int max_degree(const ConflictGraph& g) {
  int best = 0;
  for (int u = 0; u < g.node_count(); ++u) best = std::max(best, g.degree(u));
  return best;
}

int max_edge_degree(const ConflictGraph& g) {
  const auto c = g.criterion();
  if (!c || (*c != Criterion::Crossing && *c != Criterion::Intersection))
    throw std::invalid_argument("max_edge_degree: requires a Crossing or Intersection conflict graph");
  return max_degree(g);
}

}  // namespace geogrundy
