#include "geogrundy/verify.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace geogrundy {

namespace {

// Per-node set of neighbour colours, one bit per colour 0..k.
class ColorSets {
 public:
  ColorSets(const ConflictGraph& g, const EdgeColoring& col)
      : k_(col.color_count()), words_(static_cast<std::size_t>(k_) / 64 + 1),
        bits_(static_cast<std::size_t>(g.node_count()) * words_, 0) {
    for (int u = 0; u < g.node_count(); ++u) {
      std::uint64_t* row = bits_.data() + static_cast<std::size_t>(u) * words_;
      g.for_each_neighbor(u, [&](int v) {
        const auto c = static_cast<std::size_t>(col.color(v));
        row[c >> 6] |= std::uint64_t{1} << (c & 63);
      });
    }
  }

  bool has(int node, int color) const {
    const auto c = static_cast<std::size_t>(color);
    return (bits_[static_cast<std::size_t>(node) * words_ + (c >> 6)] >> (c & 63)) & 1U;
  }

  /// Smallest colour in 1..j-1 missing around `node`, or 0 if none.
  int first_missing_below(int node, int j) const {
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(node) * words_;
    for (int base = 0; base < j; base += 64) {
      std::uint64_t want = ~std::uint64_t{0};
      if (base == 0) want &= ~std::uint64_t{1};  // colour 0 is not a colour
      if (j - base < 64) want &= (std::uint64_t{1} << (j - base)) - 1;
      const std::uint64_t missing = want & ~row[static_cast<std::size_t>(base) >> 6];
      if (missing != 0) return base + std::countr_zero(missing);
    }
    return 0;
  }

 private:
  int k_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

void require_total(const ConflictGraph& g, const EdgeColoring& col) {
  if (col.size() != g.node_count()) throw std::invalid_argument("coloring size does not match conflict graph");
  if (!col.is_total()) throw std::invalid_argument("coloring is partial");
}

GrundyCheck grundy_from(const EdgeColoring& col, const ColorSets& sets) {
  for (int u = 0; u < col.size(); ++u)
    if (const int missing = sets.first_missing_below(u, col.color(u)); missing != 0)
      return {false, GrundyViolation{missing, col.color(u), u}};
  return {};
}

bool proper_from(const EdgeColoring& col, const ColorSets& sets) {
  for (int u = 0; u < col.size(); ++u)
    if (sets.has(u, col.color(u))) return false;
  return true;
}

bool complete_from(const EdgeColoring& col, const ColorSets& sets) {
  const int k = col.color_count();
  // meets[c] accumulates the neighbour colours of class c.
  std::vector<std::vector<char>> meets(static_cast<std::size_t>(k) + 1, std::vector<char>(static_cast<std::size_t>(k) + 1, 0));
  std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
  for (int u = 0; u < col.size(); ++u) {
    const int c = col.color(u);
    used[static_cast<std::size_t>(c)] = 1;
    auto& row = meets[static_cast<std::size_t>(c)];
    for (int d = 1; d <= k; ++d)
      if (!row[static_cast<std::size_t>(d)] && sets.has(u, d)) row[static_cast<std::size_t>(d)] = 1;
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      if (!used[static_cast<std::size_t>(i)] || !used[static_cast<std::size_t>(j)]) continue;
      if (!meets[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) return false;
    }
  return true;
}

}  // namespace

bool is_proper(const ConflictGraph& g, const EdgeColoring& col) {
  require_total(g, col);
  return proper_from(col, ColorSets(g, col));
}

bool is_complete(const ConflictGraph& g, const EdgeColoring& col) {
  require_total(g, col);
  return complete_from(col, ColorSets(g, col));
}

GrundyCheck has_grundy_property(const ConflictGraph& g, const EdgeColoring& col) {
  require_total(g, col);
  return grundy_from(col, ColorSets(g, col));
}

int singleton_count(const EdgeColoring& col) {
  std::vector<int> sizes(static_cast<std::size_t>(col.color_count()) + 1, 0);
  for (int c : col.colors)
    if (c > 0) ++sizes[static_cast<std::size_t>(c)];
  int singles = 0;
  for (std::size_t c = 1; c < sizes.size(); ++c) singles += sizes[c] == 1;
  return singles;
}

VerificationReport verify(const ConflictGraph& g, const EdgeColoring& col) {
  require_total(g, col);
  const ColorSets sets(g, col);
  VerificationReport r;
  r.color_count = col.color_count();
  r.proper = proper_from(col, sets);
  r.complete = complete_from(col, sets);
  const auto grundy = grundy_from(col, sets);
  r.grundy_property = grundy.holds;
  r.first_violation = grundy.witness;
  r.singleton_class_count = singleton_count(col);
  std::vector<int> sizes(static_cast<std::size_t>(r.color_count) + 1, 0);
  for (int c : col.colors) ++sizes[static_cast<std::size_t>(c)];
  for (std::size_t c = 1; c < sizes.size(); ++c)
    if (sizes[c] > 0) ++r.class_size_histogram[sizes[c]];
  return r;
}

std::string report_to_json(const VerificationReport& r, const ConflictGraph& g) {
  nlohmann::ordered_json j;
  j["color_count"] = r.color_count;
  j["proper"] = r.proper;
  j["complete"] = r.complete;
  j["grundy_property"] = r.grundy_property;
  j["singleton_class_count"] = r.singleton_class_count;
  auto& hist = j["class_size_histogram"] = nlohmann::ordered_json::array();
  for (auto [size, count] : r.class_size_histogram) hist.push_back({{"size", size}, {"classes", count}});
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    nlohmann::ordered_json w = {{"lower", v.lower}, {"higher", v.higher}};
    if (g.vertex_count() > 0) {
      const auto& e = g.edge(v.edge);
      w["edge"] = {e.a, e.b};
    } else {
      w["node"] = v.edge;
    }
    j["first_violation"] = std::move(w);
  } else {
    j["first_violation"] = nullptr;
  }
  return j.dump() + "\n";
}

}  // namespace geogrundy
