#include "geogrundy/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace geogrundy {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbor_masks(const ConflictGraph& g, int cap, const char* who) {
  if (g.node_count() > cap)
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(g.node_count()) + " nodes exceeds the cap of " +
                                std::to_string(cap));
  std::vector<Mask> nb(static_cast<std::size_t>(g.node_count()), 0);
  for (int u = 0; u < g.node_count(); ++u) g.for_each_neighbor(u, [&](int v) { nb[static_cast<std::size_t>(u)] |= Mask{1} << v; });
  return nb;
}

// Pseudo-Grundy classes built top-down. `higher` is the union of the classes
// already placed above; the next class below must avoid them and contain a
// neighbour of each of their nodes. Unplaced nodes join the bottom class,
// which carries no requirement.
class PseudoGrundySearch {
 public:
  explicit PseudoGrundySearch(std::vector<Mask> nb)
      : nb_(std::move(nb)), all_((Mask{1} << nb_.size()) - 1), memo_(std::size_t{1} << nb_.size(), -1) {}

  int classes_below(Mask higher) {
    auto& slot = memo_[higher];
    if (slot >= 0) return slot;
    const Mask free = all_ & ~higher;
    int best = 0;
    for (Mask c = free; c != 0 && best < std::popcount(free); c = (c - 1) & free) {
      bool hits = true;
      for (Mask h = higher; h != 0 && hits; h &= h - 1) hits = (nb_[static_cast<std::size_t>(std::countr_zero(h))] & c) != 0;
      if (hits) best = std::max(best, 1 + classes_below(higher | c));
    }
    return slot = best;
  }

 private:
  std::vector<Mask> nb_;
  Mask all_;
  std::vector<int> memo_;
};

int greedy_count(const std::vector<Mask>& nb, const std::vector<int>& order) {
  std::array<Mask, 32> classes{};
  int used = 0;
  for (int u : order) {
    int c = 0;
    while (c < used && (classes[static_cast<std::size_t>(c)] & nb[static_cast<std::size_t>(u)]) != 0) ++c;
    classes[static_cast<std::size_t>(c)] |= Mask{1} << u;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace

int exact_pseudo_grundy(const ConflictGraph& g) {
  auto nb = neighbor_masks(g, kPseudoGrundyNodeCap, "exact_pseudo_grundy");
  const int nodes = g.node_count();
  if (nodes == 0) return 0;
  // A colour-k edge needs k - 1 distinct neighbours.
  const int ceiling = std::min(nodes, max_degree(g) + 1);
  PseudoGrundySearch search(std::move(nb));
  int best = 1;
  // The top class can be taken to be a single node: any other members can
  // move to the bottom class without breaking a requirement.
  for (int v = 0; v < nodes && best < ceiling; ++v) best = std::max(best, 1 + search.classes_below(Mask{1} << v));
  return best;
}

int exact_grundy_by_peeling(const ConflictGraph& g) {
  const auto nb = neighbor_masks(g, kGrundyNodeCap, "exact_grundy");
  const int nodes = g.node_count();
  std::vector<int> memo(std::size_t{1} << nodes, -1);
  // rest: nodes not yet coloured; the next class is a maximal independent set of rest.
  auto peel = [&](auto&& self, Mask rest) -> int {
    if (rest == 0) return 0;
    auto& slot = memo[rest];
    if (slot >= 0) return slot;
    int best = 0;
    for (Mask c = rest; c != 0; c = (c - 1) & rest) {
      bool ok = true;
      for (Mask m = c; m != 0 && ok; m &= m - 1) ok = (nb[static_cast<std::size_t>(std::countr_zero(m))] & c) == 0;
      for (Mask m = rest & ~c; m != 0 && ok; m &= m - 1) ok = (nb[static_cast<std::size_t>(std::countr_zero(m))] & c) != 0;
      if (ok) best = std::max(best, 1 + self(self, rest & ~c));
    }
    return slot = best;
  };
  return peel(peel, (Mask{1} << nodes) - 1);
}

int exact_grundy(const ConflictGraph& g) {
  if (g.node_count() > kGrundyPermutationLimit) return exact_grundy_by_peeling(g);
  const auto nb = neighbor_masks(g, kGrundyNodeCap, "exact_grundy");
  std::vector<int> order(static_cast<std::size_t>(g.node_count()));
  std::iota(order.begin(), order.end(), 0);
  const int ceiling = max_degree(g) + 1;
  int best = 0;
  do {
    best = std::max(best, greedy_count(nb, order));
  } while (best < ceiling && std::next_permutation(order.begin(), order.end()));
  return best;
}

bool disjoint_pair_exists(const PointSet& s, std::span<const Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges[i] != edges[j] && s.relation(edges[i], edges[j]) == SegmentRelation::Disjoint) return true;
  return false;
}

}  // namespace geogrundy
