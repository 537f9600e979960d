#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geogrundy/geometry.hpp"

namespace geogrundy {

/// Edge-adjacency rule for a geometric graph.
enum class Criterion { Crossing, Intersection, Disjointness, NonCrossing };

std::string_view to_string(Criterion c);
/// Accepts the lower-case CLI names; throws std::invalid_argument otherwise.
Criterion parse_criterion(std::string_view name);

bool adjacent(SegmentRelation r, Criterion c);
bool adjacent(const PointSet& s, const Edge& e, const Edge& f, Criterion c);

/// Square symmetric bit matrix, one row of 64-bit words per node.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int size)
      : size_(size), words_((static_cast<std::size_t>(size) + 63) / 64),
        bits_(static_cast<std::size_t>(size) * words_, 0) {}

  int size() const { return size_; }
  bool test(int i, int j) const { return (row(i)[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1U; }
  void set(int i, int j) { bits_[static_cast<std::size_t>(i) * words_ + (static_cast<std::size_t>(j) >> 6)] |= std::uint64_t{1} << (j & 63); }
  std::span<const std::uint64_t> row(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * words_, words_};
  }

 private:
  int size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Nodes are the edges of K_n (lexicographic order); adjacency follows a
/// Criterion. Abstract graphs (test fixtures, oracle inputs) carry no
/// geometry and no criterion.
///
/// Geometric graphs with at most kDenseVertexLimit vertices are materialized
/// as a dense bit matrix; larger ones answer adjacency on demand.
class ConflictGraph {
 public:
  static constexpr int kDenseVertexLimit = 200;

  /// Abstract graph on `nodes` nodes with the given undirected pairs.
  static ConflictGraph from_pairs(int nodes, std::span<const std::pair<int, int>> pairs);

  int node_count() const { return nodes_; }
  /// Vertex count of the underlying K_n; 0 for abstract graphs.
  int vertex_count() const { return vertices_; }
  std::optional<Criterion> criterion() const { return criterion_; }
  bool is_dense() const { return dense_.has_value(); }

  const Edge& edge(int node) const { return edges_[static_cast<std::size_t>(node)]; }
  std::span<const Edge> edges() const { return edges_; }

  bool adjacent(int u, int v) const;

  /// Calls fn(v) for every neighbour v of u in increasing order.
  template <class Fn>
  void for_each_neighbor(int u, Fn&& fn) const {
    if (dense_) {
      const auto row = dense_->row(u);
      for (std::size_t w = 0; w < row.size(); ++w)
        for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1)
          fn(static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
    } else {
      for (int v = 0; v < nodes_; ++v)
        if (v != u && adjacent(u, v)) fn(v);
    }
  }

  int degree(int u) const;
  /// Number of unordered adjacent pairs.
  std::int64_t adjacent_pair_count() const;

 private:
  friend ConflictGraph build_conflict_graph(const PointSet& s, Criterion c);

  int nodes_ = 0;
  int vertices_ = 0;
  std::optional<Criterion> criterion_;
  std::vector<Edge> edges_;
  std::optional<PointSet> points_;  // on-demand mode only
  std::optional<BitMatrix> dense_;
};

ConflictGraph build_conflict_graph(const PointSet& s, Criterion c);

/// Delta_1: maximum number of edges adjacent to a single edge. Defined for
/// the Crossing and Intersection criteria only.
int max_edge_degree(const ConflictGraph& g);

/// Maximum degree over any graph, abstract or geometric.
int max_degree(const ConflictGraph& g);

}  // namespace geogrundy
