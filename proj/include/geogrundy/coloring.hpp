#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geogrundy/conflict.hpp"
#include "geogrundy/geometry.hpp"

namespace geogrundy {

enum class Stage { Uncolored, Constructed, GreedyCompleted };

std::string_view to_string(Stage s);

/// Colours of the edges of K_n, indexed by lexicographic edge index.
/// Colour 0 means "not yet coloured"; real colours start at 1.
struct EdgeColoring {
  int n = 0;
  Criterion criterion = Criterion::Intersection;
  std::vector<int> colors;
  std::vector<Stage> stages;

  EdgeColoring() = default;
  EdgeColoring(int vertices, Criterion c)
      : n(vertices), criterion(c), colors(static_cast<std::size_t>(edge_count(vertices)), 0),
        stages(colors.size(), Stage::Uncolored) {}

  /// Colouring of an abstract conflict graph with `nodes` nodes (n = 0).
  static EdgeColoring abstract(int nodes) {
    EdgeColoring col;
    col.colors.assign(static_cast<std::size_t>(nodes), 0);
    col.stages.assign(static_cast<std::size_t>(nodes), Stage::Uncolored);
    return col;
  }

  int size() const { return static_cast<int>(colors.size()); }
  int color(int edge) const { return colors[static_cast<std::size_t>(edge)]; }
  int color(const Edge& e) const { return color(edge_index(n, e)); }

  void assign(int edge, int c, Stage s) {
    colors[static_cast<std::size_t>(edge)] = c;
    stages[static_cast<std::size_t>(edge)] = s;
  }
  void assign(const Edge& e, int c, Stage s) { assign(edge_index(n, e), c, s); }

  bool is_total() const;
  /// Largest colour in use.
  int color_count() const;
  /// Distinct colours carried by Constructed edges.
  int constructed_color_count() const;
};

/// {"n", "criterion", "assignments": [{"edge", "color", "stage"}...]}.
std::string coloring_to_json(const EdgeColoring& col);
/// Inverse of coloring_to_json; throws std::invalid_argument on malformed input.
EdgeColoring coloring_from_json(std::string_view text);

}  // namespace geogrundy
