#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "geogrundy/coloring.hpp"
#include "geogrundy/conflict.hpp"
#include "geogrundy/designs.hpp"
#include "geogrundy/geometry.hpp"

namespace geogrundy {

/// A construction's point set together with its completed colouring.
struct Construction {
  PointSet points;
  EdgeColoring coloring;
};

// ---------------------------------------------------------------------------
// Greedy completion

/// Colours exactly the nodes in `order`, in order, each with the smallest
/// positive colour absent from its already coloured neighbours. Nodes not in
/// `order` that are still uncoloured are ignored.
void greedy_fill(const ConflictGraph& g, EdgeColoring& col, std::span<const int> order);

/// Greedy completion of a partial colouring. An empty `order` means every
/// uncoloured node in lexicographic edge order; otherwise `order` must list
/// every uncoloured node.
EdgeColoring greedy_complete(const ConflictGraph& g, EdgeColoring partial, std::span<const int> order = {});

// ---------------------------------------------------------------------------
// Convex position

/// Edges {x, x + offset} (indices mod n) of the circulant graph C_n({offset}).
std::vector<Edge> circulant_edges(int n, int offset);

/// Proper Grundy colouring of the convex n-gon under Intersection built from
/// the circulants C_n({1}), ..., C_n({n/2}): offset i contributes i + 1 fresh
/// colours (n/2 when 2i = n), each propagated to the non-wrapping rotations
/// of its starting edge. Greedy completion colours the rest.
Construction circulant_coloring(int n);

/// Pseudo-Grundy colouring of the convex n-gon (n >= 8) under Crossing.
///
/// On the first m vertices (m the largest power of two <= n), level j splits
/// the vertices into 2^(j+1) blocks of size s = m / 2^(j+1) (s >= 2); the s^2
/// edges between blocks t and t + 2 take s^2 colours reused for every t.
/// These (m^2 - 16) / 12 colours sit on top of the greedily completed rest.
Construction crossing_bipartition_coloring(int n);

/// Number of constructed colours of crossing_bipartition_coloring(n).
int bipartition_constructed_colors(int n);

// ---------------------------------------------------------------------------
// General position

/// Pseudo-Grundy colouring under Disjointness from a halving line: the two
/// sides get the same palette, one colour per edge, so every coloured edge
/// sees every smaller colour on the opposite side.
EdgeColoring halving_line_coloring(const PointSet& s);

/// Hanani decomposition relabelled onto the points of `s` so that the leave
/// is drawn without crossings on the left-to-right order of the points.
Decomposition place_decomposition(const PointSet& s);

/// Pseudo-Grundy colouring under NonCrossing: one colour per triangle of the
/// placed decomposition, then one colour per leave edge. No greedy stage.
EdgeColoring triangle_coloring(const PointSet& s);

/// Four disjoint vertex sets A1..A4 (cyclic order) such that for every
/// transversal the segment a1a3 crosses a2a4, hence is in convex position.
struct ConvexQuadruple {
  std::array<std::vector<int>, 4> parts;
  int q = 0;  // common size of the parts
};

/// Exhaustive check of all q^4 transversals (and pairwise disjointness).
bool certify_quadruple(const PointSet& s, const ConvexQuadruple& quad);

/// Searches for a certified quadruple with parts of size `min_size`
/// (default max(2, n / 20)), shrinking the size down to 2 on failure.
/// Throws std::runtime_error if no certified quadruple of size >= 2 exists
/// within the search.
ConvexQuadruple find_convex_quadruple(const PointSet& s, std::optional<int> min_size = std::nullopt);

/// M = A1 x A3 and M' = A2 x A4 both coloured 1..q^2, then greedy completion.
/// Criterion must be Crossing or Intersection.
EdgeColoring transversal_coloring(const PointSet& s, Criterion c, const ConvexQuadruple& quad);
EdgeColoring transversal_coloring(const PointSet& s, Criterion c);

}  // namespace geogrundy
