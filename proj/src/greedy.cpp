#include <stdexcept>
#include <vector>

#include "geogrundy/constructions.hpp"

namespace geogrundy {

void greedy_fill(const ConflictGraph& g, EdgeColoring& col, std::span<const int> order) {
  // seen[c] == stamp marks colour c as taken around the current node.
  std::vector<int> seen(static_cast<std::size_t>(col.color_count()) + order.size() + 2, -1);
  int stamp = 0;
  for (int u : order) {
    if (col.color(u) != 0) throw std::invalid_argument("greedy_fill: node already coloured");
    g.for_each_neighbor(u, [&](int v) {
      const int c = col.color(v);
      if (c > 0 && static_cast<std::size_t>(c) < seen.size()) seen[static_cast<std::size_t>(c)] = stamp;
    });
    int c = 1;
    while (seen[static_cast<std::size_t>(c)] == stamp) ++c;
    col.assign(u, c, Stage::GreedyCompleted);
    ++stamp;
  }
}

EdgeColoring greedy_complete(const ConflictGraph& g, EdgeColoring partial, std::span<const int> order) {
  if (partial.size() != g.node_count()) throw std::invalid_argument("greedy_complete: size mismatch");
  std::vector<int> lex;
  if (order.empty()) {
    for (int u = 0; u < partial.size(); ++u)
      if (partial.color(u) == 0) lex.push_back(u);
    order = lex;
  }
  greedy_fill(g, partial, order);
  if (!partial.is_total()) throw std::invalid_argument("greedy_complete: order does not cover every uncoloured node");
  return partial;
}

}  // namespace geogrundy
