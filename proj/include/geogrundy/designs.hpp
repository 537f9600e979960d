#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "geogrundy/geometry.hpp"

namespace geogrundy {

enum class LeaveKind { Empty, PerfectMatching, Tripole, FourCycle };

std::string_view to_string(LeaveKind k);

using Triangle = std::array<int, 3>;

/// Edges of K_n split into edge-disjoint triangles plus a leave F.
struct Decomposition {
  int n = 0;
  std::vector<Triangle> triangles;
  std::vector<Edge> leave;
  LeaveKind kind = LeaveKind::Empty;
};

/// Leave shape required for K_n by residue of n mod 6.
LeaveKind expected_leave_kind(int n);
/// |F| for K_n: 0, n/2, n/2 + 1 or 4 depending on n mod 6.
int expected_leave_size(int n);

/// Maximum packing of K_n with triangles whose leave has the shape required
/// for n mod 6. Deterministic.
///
/// n = 3 (mod 6): Bose construction. n = 1 (mod 6): Skolem construction.
/// n = 0, 2 (mod 6): delete one point of the Steiner triple system on n + 1
/// points; the triples through it leave a perfect matching.
/// n = 4, 5 (mod 6): the leave (a K_{1,3} plus a matching, or a 4-cycle) is
/// fixed up front and K_n - F is decomposed by seeded hill-climbing.
Decomposition hanani_decompose(int n);

struct DecompositionCheck {
  bool valid = true;
  std::string reason;  // first violated condition when !valid

  explicit operator bool() const { return valid; }
};

DecompositionCheck validate_decomposition(const Decomposition& d);

/// {"n", "triangles", "leave", "kind"} with stable key order.
std::string decomposition_to_json(const Decomposition& d);

}  // namespace geogrundy
