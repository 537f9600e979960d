#include "geogrundy/designs.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace geogrundy {

namespace {

void canonicalize(Decomposition& d) {
  for (auto& t : d.triangles) std::sort(t.begin(), t.end());
  std::sort(d.triangles.begin(), d.triangles.end());
  std::sort(d.leave.begin(), d.leave.end());
}

// Bose: v = 6t + 3 on Z_{2t+1} x Z_3 with x o y = (x + y) / 2.
std::vector<Triangle> bose_sts(int v) {
  const int m = v / 3;
  const int half = (m + 1) / 2;  // inverse of 2 modulo the odd m
  auto label = [m](int x, int k) { return x + m * k; };
  auto op = [m, half](int x, int y) { return static_cast<int>((static_cast<std::int64_t>(x + y) * half) % m); };
  std::vector<Triangle> out;
  for (int x = 0; x < m; ++x) out.push_back({label(x, 0), label(x, 1), label(x, 2)});
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      for (int k = 0; k < 3; ++k) out.push_back({label(x, k), label(y, k), label(op(x, y), (k + 1) % 3)});
  return out;
}

// Skolem: v = 6t + 1 on {inf} u Z_{2t} x Z_3 with a half-idempotent
// commutative quasigroup (Z_{2t} addition, symbols renamed so that
// x o x = (x + t) o (x + t) = x).
std::vector<Triangle> skolem_sts(int v) {
  const int t = (v - 1) / 6;
  const int m = 2 * t;
  const int inf = v - 1;
  auto label = [m](int x, int k) { return x + m * k; };
  auto op = [m, t](int x, int y) {
    const int s = (x + y) % m;
    return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
  };
  std::vector<Triangle> out;
  for (int x = 0; x < t; ++x) {
    out.push_back({label(x, 0), label(x, 1), label(x, 2)});
    for (int k = 0; k < 3; ++k) out.push_back({inf, label(t + x, k), label(x, (k + 1) % 3)});
  }
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      for (int k = 0; k < 3; ++k) out.push_back({label(x, k), label(y, k), label(op(x, y), (k + 1) % 3)});
  return out;
}

std::vector<Triangle> steiner_triple_system(int v) {
  if (v % 6 == 3) return bose_sts(v);
  if (v % 6 == 1) return skolem_sts(v);
  throw std::invalid_argument("no Steiner triple system on " + std::to_string(v) + " points");
}

std::vector<Edge> fixed_leave(int n, LeaveKind kind) {
  std::vector<Edge> f;
  if (kind == LeaveKind::Tripole) {
    f = {{0, 1}, {0, 2}, {0, 3}};
    for (int v = 4; v + 1 < n; v += 2) f.emplace_back(v, v + 1);
  } else if (kind == LeaveKind::FourCycle) {
    f = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  }
  return f;
}

// Decomposes K_n - leave into triangles (Stinson-style hill-climbing).
// Every vertex must have even degree in K_n - leave and the edge count must be
// divisible by three.
std::vector<Triangle> hill_climb(int n, const std::vector<Edge>& leave, std::uint64_t seed) {
  const auto N = static_cast<std::size_t>(n);
  std::vector<char> in_graph(N * N, 1);
  for (int v = 0; v < n; ++v) in_graph[static_cast<std::size_t>(v) * N + static_cast<std::size_t>(v)] = 0;
  for (const auto& e : leave) {
    in_graph[static_cast<std::size_t>(e.a) * N + static_cast<std::size_t>(e.b)] = 0;
    in_graph[static_cast<std::size_t>(e.b) * N + static_cast<std::size_t>(e.a)] = 0;
  }
  const int graph_edges = edge_count(n) - static_cast<int>(leave.size());
  const int target = graph_edges / 3;
  const std::int64_t step_cap = 2000LL * n * n + 100'000;

  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    auto pick = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
    std::vector<int> cover(N * N, -1);  // triangle slot covering an edge, -1 if uncovered
    std::vector<Triangle> slots;
    std::vector<int> free_slots;
    int placed = 0;
    auto at = [N](int a, int b) { return static_cast<std::size_t>(a) * N + static_cast<std::size_t>(b); };
    auto set_cover = [&](int a, int b, int id) { cover[at(a, b)] = id; cover[at(b, a)] = id; };
    std::vector<int> live, nbrs;

    for (std::int64_t step = 0; step < step_cap && placed < target; ++step) {
      live.clear();
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
          if (in_graph[at(v, w)] && cover[at(v, w)] < 0) {
            live.push_back(v);
            break;
          }
      const int x = live[pick(live.size())];
      nbrs.clear();
      for (int w = 0; w < n; ++w)
        if (in_graph[at(x, w)] && cover[at(x, w)] < 0) nbrs.push_back(w);
      if (nbrs.size() < 2) continue;
      const auto i = pick(nbrs.size());
      auto j = pick(nbrs.size() - 1);
      if (j >= i) ++j;
      const int y = nbrs[i];
      const int z = nbrs[j];
      if (!in_graph[at(y, z)]) continue;
      if (const int old = cover[at(y, z)]; old >= 0) {
        for (int p = 0; p < 3; ++p)
          for (int q = p + 1; q < 3; ++q) set_cover(slots[old][p], slots[old][q], -1);
        free_slots.push_back(old);
        --placed;
      }
      int id;
      if (!free_slots.empty()) {
        id = free_slots.back();
        free_slots.pop_back();
        slots[static_cast<std::size_t>(id)] = {x, y, z};
      } else {
        id = static_cast<int>(slots.size());
        slots.push_back({x, y, z});
      }
      set_cover(x, y, id);
      set_cover(x, z, id);
      set_cover(y, z, id);
      ++placed;
    }
    if (placed == target) {
      std::sort(free_slots.begin(), free_slots.end(), std::greater<>());
      for (int id : free_slots) slots.erase(slots.begin() + id);
      return slots;
    }
  }
}

}  // namespace

std::string_view to_string(LeaveKind k) {
  switch (k) {
    case LeaveKind::Empty: return "empty";
    case LeaveKind::PerfectMatching: return "perfect-matching";
    case LeaveKind::Tripole: return "tripole";
    case LeaveKind::FourCycle: return "four-cycle";
  }
  return "?";
}

LeaveKind expected_leave_kind(int n) {
  switch (n % 6) {
    case 1:
    case 3: return LeaveKind::Empty;
    case 0:
    case 2: return LeaveKind::PerfectMatching;
    case 4: return LeaveKind::Tripole;
    default: return LeaveKind::FourCycle;
  }
}

int expected_leave_size(int n) {
  switch (expected_leave_kind(n)) {
    case LeaveKind::Empty: return 0;
    case LeaveKind::PerfectMatching: return n / 2;
    case LeaveKind::Tripole: return n / 2 + 1;
    case LeaveKind::FourCycle: return 4;
  }
  return 0;
}

Decomposition hanani_decompose(int n) {
  if (n < 3) throw std::invalid_argument("hanani_decompose: n must be at least 3");
  Decomposition d;
  d.n = n;
  d.kind = expected_leave_kind(n);
  switch (d.kind) {
    case LeaveKind::Empty:
      d.triangles = steiner_triple_system(n);
      break;
    case LeaveKind::PerfectMatching: {
      // Triples through the deleted point n become the matching.
      for (const auto& t : steiner_triple_system(n + 1)) {
        if (t[0] != n && t[1] != n && t[2] != n) {
          d.triangles.push_back(t);
          continue;
        }
        std::vector<int> rest;
        for (int v : t)
          if (v != n) rest.push_back(v);
        d.leave.emplace_back(rest[0], rest[1]);
      }
      break;
    }
    case LeaveKind::Tripole:
    case LeaveKind::FourCycle:
      d.leave = fixed_leave(n, d.kind);
      d.triangles = hill_climb(n, d.leave, 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
      break;
  }
  canonicalize(d);
  return d;
}

DecompositionCheck validate_decomposition(const Decomposition& d) {
  auto fail = [](std::string why) { return DecompositionCheck{false, std::move(why)}; };
  const int n = d.n;
  if (n < 3) return fail("n must be at least 3");
  if (d.kind != expected_leave_kind(n))
    return fail("leave kind " + std::string(to_string(d.kind)) + " does not match n mod 6");

  auto name = [](const Edge& e) { return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")"; };
  std::vector<int> uses(static_cast<std::size_t>(edge_count(n)), 0);
  auto cover = [&](int u, int v) -> std::string {
    if (u < 0 || v < 0 || u >= n || v >= n) return "vertex out of range";
    if (u == v) return "degenerate edge at vertex " + std::to_string(u);
    const Edge e(u, v);
    if (++uses[static_cast<std::size_t>(edge_index(n, e))] > 1) return "edge " + name(e) + " covered twice";
    return {};
  };
  for (const auto& t : d.triangles)
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q)
        if (auto err = cover(t[p], t[q]); !err.empty()) return fail(err);
  for (const auto& e : d.leave)
    if (auto err = cover(e.a, e.b); !err.empty()) return fail(err);
  for (const auto& e : all_edges(n))
    if (uses[static_cast<std::size_t>(edge_index(n, e))] == 0) return fail("edge " + name(e) + " not covered");

  const auto f_size = static_cast<int>(d.leave.size());
  if (f_size != expected_leave_size(n))
    return fail("leave has " + std::to_string(f_size) + " edges, expected " + std::to_string(expected_leave_size(n)));

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& e : d.leave) {
    ++deg[static_cast<std::size_t>(e.a)];
    ++deg[static_cast<std::size_t>(e.b)];
  }
  switch (d.kind) {
    case LeaveKind::Empty:
      break;
    case LeaveKind::PerfectMatching:
      for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] != 1) return fail("leave is not a perfect matching at vertex " + std::to_string(v));
      break;
    case LeaveKind::Tripole: {
      for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] % 2 == 0)
          return fail("tripole vertex " + std::to_string(v) + " has even degree");
      std::vector<int> parent(static_cast<std::size_t>(n));
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
      };
      for (const auto& e : d.leave) {
        const int ra = find(e.a), rb = find(e.b);
        if (ra == rb) return fail("tripole contains a cycle");
        parent[static_cast<std::size_t>(ra)] = rb;
      }
      break;
    }
    case LeaveKind::FourCycle: {
      std::vector<int> verts;
      for (int v = 0; v < n; ++v) {
        const int k = deg[static_cast<std::size_t>(v)];
        if (k == 2) verts.push_back(v);
        else if (k != 0) return fail("four-cycle vertex " + std::to_string(v) + " has degree " + std::to_string(k));
      }
      if (verts.size() != 4) return fail("leave is not a 4-cycle");
      // Four vertices of degree two and four edges: a 4-cycle unless it is two
      // digons, which cannot occur without repeated edges.
      break;
    }
  }
  return {};
}

std::string decomposition_to_json(const Decomposition& d) {
  nlohmann::ordered_json j;
  j["n"] = d.n;
  j["triangles"] = nlohmann::ordered_json::array();
  for (const auto& t : d.triangles) j["triangles"].push_back({t[0], t[1], t[2]});
  j["leave"] = nlohmann::ordered_json::array();
  for (const auto& e : d.leave) j["leave"].push_back({e.a, e.b});
  j["kind"] = std::string(to_string(d.kind));
  return j.dump() + "\n";
}

}  // namespace geogrundy
