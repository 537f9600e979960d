#pragma once

#include <span>

#include "geogrundy/conflict.hpp"
#include "geogrundy/geometry.hpp"

namespace geogrundy {

/// Exhaustive searches are exponential; inputs above these caps are rejected
/// with std::invalid_argument.
inline constexpr int kPseudoGrundyNodeCap = 15;
inline constexpr int kGrundyNodeCap = 12;
/// exact_grundy enumerates all node orderings up to this size.
inline constexpr int kGrundyPermutationLimit = 10;

/// Largest k admitting a pseudo-Grundy k-colouring (exact).
int exact_pseudo_grundy(const ConflictGraph& g);

/// Largest k admitting a proper Grundy k-colouring (exact).
int exact_grundy(const ConflictGraph& g);

/// Grundy number by peeling maximal independent sets (memoised over
/// subsets); used beyond kGrundyPermutationLimit and as a cross-check.
int exact_grundy_by_peeling(const ConflictGraph& g);

/// True iff two of the given edges are disjoint as segments.
bool disjoint_pair_exists(const PointSet& s, std::span<const Edge> edges);

}  // namespace geogrundy
