#include "geogrundy/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace geogrundy {

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::Uncolored: return "uncolored";
    case Stage::Constructed: return "constructed";
    case Stage::GreedyCompleted: return "greedy";
  }
  return "?";
}

bool EdgeColoring::is_total() const {
  return std::all_of(colors.begin(), colors.end(), [](int c) { return c > 0; });
}

int EdgeColoring::color_count() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

int EdgeColoring::constructed_color_count() const {
  std::set<int> seen;
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (stages[i] == Stage::Constructed) seen.insert(colors[i]);
  return static_cast<int>(seen.size());
}

std::string coloring_to_json(const EdgeColoring& col) {
  nlohmann::ordered_json j;
  j["n"] = col.n;
  j["criterion"] = std::string(to_string(col.criterion));
  auto& list = j["assignments"] = nlohmann::ordered_json::array();
  const auto edges = all_edges(col.n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (col.colors[i] == 0) continue;
    nlohmann::ordered_json a;
    a["edge"] = {edges[i].a, edges[i].b};
    a["color"] = col.colors[i];
    a["stage"] = std::string(to_string(col.stages[i]));
    list.push_back(std::move(a));
  }
  return j.dump() + "\n";
}

EdgeColoring coloring_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const int n = j.at("n").get<int>();
    if (n < 0) throw std::invalid_argument("negative n");
    EdgeColoring col(n, parse_criterion(j.at("criterion").get<std::string>()));
    for (const auto& a : j.at("assignments")) {
      const auto& e = a.at("edge");
      const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("edge out of range");
      const int c = a.at("color").get<int>();
      if (c <= 0) throw std::invalid_argument("colors must be positive");
      Stage s = Stage::Constructed;
      const auto name = a.value("stage", std::string("constructed"));
      if (name == "greedy") s = Stage::GreedyCompleted;
      else if (name != "constructed") throw std::invalid_argument("unknown stage '" + name + "'");
      col.assign(Edge(u, v), c, s);
    }
    return col;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("coloring JSON: ") + e.what());
  }
}

}  // namespace geogrundy
