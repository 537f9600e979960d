#pragma once

#include <map>
#include <optional>
#include <string>

#include "geogrundy/coloring.hpp"
#include "geogrundy/conflict.hpp"

namespace geogrundy {

/// Colour `lower` < `higher` such that `edge` (coloured `higher`) has no
/// neighbour coloured `lower`.
struct GrundyViolation {
  int lower = 0;
  int higher = 0;
  int edge = 0;  // node index in the conflict graph
};

struct GrundyCheck {
  bool holds = true;
  std::optional<GrundyViolation> witness;

  explicit operator bool() const { return holds; }
};

struct VerificationReport {
  int color_count = 0;
  bool proper = false;
  bool complete = false;
  bool grundy_property = false;
  int singleton_class_count = 0;
  std::map<int, int> class_size_histogram;  // class size -> number of classes
  std::optional<GrundyViolation> first_violation;

  bool pseudo_grundy() const { return grundy_property; }
  bool grundy() const { return proper && grundy_property; }
};

// All checks below reject partial colourings (and colourings whose size does
// not match the graph) with std::invalid_argument.

bool is_proper(const ConflictGraph& g, const EdgeColoring& col);
/// Every pair of distinct colours meets on some adjacent pair.
bool is_complete(const ConflictGraph& g, const EdgeColoring& col);
/// For all i < j every j-coloured edge has an i-coloured neighbour.
GrundyCheck has_grundy_property(const ConflictGraph& g, const EdgeColoring& col);
/// Number of colours used by exactly one edge (uncoloured edges ignored).
int singleton_count(const EdgeColoring& col);

VerificationReport verify(const ConflictGraph& g, const EdgeColoring& col);

std::string report_to_json(const VerificationReport& r, const ConflictGraph& g);

}  // namespace geogrundy
