#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "geogrundy/constructions.hpp"

namespace geogrundy {

namespace {

bool transversal_ok(const PointSet& s, int a1, int a2, int a3, int a4) {
  return s.relation(Edge(a1, a3), Edge(a2, a4)) == SegmentRelation::Crossing &&
         in_convex_position(s[a1], s[a2], s[a3], s[a4]);
}

// Would adding p to part i keep every transversal certified?
bool admits(const PointSet& s, const std::array<std::vector<int>, 4>& parts, int i, int p) {
  const auto& x = parts[static_cast<std::size_t>((i + 1) % 4)];
  const auto& y = parts[static_cast<std::size_t>((i + 2) % 4)];
  const auto& z = parts[static_cast<std::size_t>((i + 3) % 4)];
  for (int u : x)
    for (int v : y)
      for (int w : z) {
        // Rotate (p, u, v, w) back so that slot 0 is part 0.
        std::array<int, 4> t{};
        t[static_cast<std::size_t>(i)] = p;
        t[static_cast<std::size_t>((i + 1) % 4)] = u;
        t[static_cast<std::size_t>((i + 2) % 4)] = v;
        t[static_cast<std::size_t>((i + 3) % 4)] = w;
        if (!transversal_ok(s, t[0], t[1], t[2], t[3])) return false;
      }
  return true;
}

// Grows the four parts round-robin from the points extreme in four
// orthogonal directions, keeping only points that preserve the certificate.
std::optional<ConvexQuadruple> grow(const PointSet& s, double theta, int q) {
  const int n = s.size();
  double cx = 0, cy = 0;
  for (const auto& p : s.points()) {
    cx += static_cast<double>(p.x);
    cy += static_cast<double>(p.y);
  }
  cx /= n;
  cy /= n;

  std::array<std::vector<int>, 4> candidates;
  for (int i = 0; i < 4; ++i) {
    const double phi = theta + i * std::numbers::pi / 2;
    const double ux = std::cos(phi), uy = std::sin(phi);
    std::vector<double> score(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
      score[static_cast<std::size_t>(p)] = (static_cast<double>(s[p].x) - cx) * ux + (static_cast<double>(s[p].y) - cy) * uy;
    auto& c = candidates[static_cast<std::size_t>(i)];
    c.resize(static_cast<std::size_t>(n));
    std::iota(c.begin(), c.end(), 0);
    std::stable_sort(c.begin(), c.end(), [&](int a, int b) { return score[static_cast<std::size_t>(a)] > score[static_cast<std::size_t>(b)]; });
  }

  ConvexQuadruple quad;
  quad.q = q;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::array<std::size_t, 4> cursor{};
  for (;;) {
    bool done = true;
    for (int i = 0; i < 4; ++i) {
      auto& part = quad.parts[static_cast<std::size_t>(i)];
      if (static_cast<int>(part.size()) >= q) continue;
      done = false;
      const auto& c = candidates[static_cast<std::size_t>(i)];
      auto& k = cursor[static_cast<std::size_t>(i)];
      for (; k < c.size(); ++k) {
        const int p = c[k];
        if (used[static_cast<std::size_t>(p)] || !admits(s, quad.parts, i, p)) continue;
        part.push_back(p);
        used[static_cast<std::size_t>(p)] = 1;
        ++k;
        break;
      }
      if (k >= c.size() && static_cast<int>(part.size()) < q) return std::nullopt;
    }
    if (done) break;
  }
  for (auto& part : quad.parts) std::sort(part.begin(), part.end());
  return quad;
}

}  // namespace

bool certify_quadruple(const PointSet& s, const ConvexQuadruple& quad) {
  std::vector<char> seen(static_cast<std::size_t>(s.size()), 0);
  for (const auto& part : quad.parts) {
    if (static_cast<int>(part.size()) < quad.q) return false;
    for (int p : part) {
      if (p < 0 || p >= s.size() || seen[static_cast<std::size_t>(p)]) return false;
      seen[static_cast<std::size_t>(p)] = 1;
    }
  }
  for (int a1 : quad.parts[0])
    for (int a2 : quad.parts[1])
      for (int a3 : quad.parts[2])
        for (int a4 : quad.parts[3])
          if (!transversal_ok(s, a1, a2, a3, a4)) return false;
  return true;
}

ConvexQuadruple find_convex_quadruple(const PointSet& s, std::optional<int> min_size) {
  constexpr int kDirections = 64;
  const int n = s.size();
  const int target = min_size.value_or(std::max(2, n / 20));
  if (target < 1 || 4 * target > n) throw std::invalid_argument("find_convex_quadruple: part size out of range");
  for (int q = target; q >= std::min(2, target); --q)
    for (int d = 0; d < kDirections; ++d) {
      const double theta = d * (std::numbers::pi / 2) / kDirections;
      if (auto quad = grow(s, theta, q); quad && certify_quadruple(s, *quad)) return *quad;
    }
  throw std::runtime_error("find_convex_quadruple: no certified quadruple found");
}

}  // namespace geogrundy
