#include "geogrundy/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "geogrundy/bounds.hpp"
#include "geogrundy/constructions.hpp"
#include "geogrundy/oracle.hpp"
#include "geogrundy/verify.hpp"
#include "json.hpp"

namespace geogrundy::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& fallback) {
  if (!path) {
    fallback << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + *path + "'");
  out << text;
}

PointSet load_points(const std::string& path) {
  std::istringstream in(slurp(path));
  try {
    return read_points(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int require_n(const RunConfig& c, int minimum) {
  if (!c.n) throw UsageError(c.command + ": --n is required");
  if (*c.n < minimum) throw UsageError(c.command + ": --n must be at least " + std::to_string(minimum));
  return *c.n;
}

Criterion criterion_flag(const RunConfig& c, Criterion fallback) {
  if (!c.criterion) return fallback;
  try {
    return parse_criterion(*c.criterion);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Input points for the general-position constructions.
PointSet general_points(const RunConfig& c, int minimum) {
  if (c.points_path) {
    auto s = load_points(*c.points_path);
    if (s.size() < minimum) throw UsageError("point set needs at least " + std::to_string(minimum) + " points");
    return s;
  }
  return gen_general(require_n(c, minimum), c.seed);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

int cmd_gen(const RunConfig& c, std::ostream& out) {
  const int n = require_n(c, 3);
  const auto s = c.convex ? gen_convex(n) : gen_general(n, c.seed);
  emit(c.out_path, points_to_string(s), out);
  return kCertified;
}

int cmd_color(const RunConfig& c, std::ostream& out) {
  auto outcome = color(c);
  if (c.out_path) emit(c.out_path, outcome.coloring_json, out);
  if (c.points_out_path) emit(c.points_out_path, points_to_string(outcome.points), out);
  emit(c.report_path, outcome.report_json, out);
  return outcome.certified ? kCertified : kCertificationFailed;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (!c.points_path || !c.coloring_path) throw UsageError("verify: --points and --coloring are required");
  const auto s = load_points(*c.points_path);
  EdgeColoring col;
  try {
    col = coloring_from_json(slurp(*c.coloring_path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (col.n != s.size()) throw UsageError("verify: coloring has n = " + std::to_string(col.n) + " but the point set has " + std::to_string(s.size()));
  if (!col.is_total()) throw UsageError("verify: coloring is partial");
  const auto criterion = criterion_flag(c, col.criterion);
  const auto g = build_conflict_graph(s, criterion);
  const auto report = verify(g, col);
  emit(c.report_path ? c.report_path : c.out_path, report_to_json(report, g), out);
  const bool ok = report.grundy_property && (!c.require_proper || report.proper);
  return ok ? kCertified : kCertificationFailed;
}

int cmd_bounds(const RunConfig& c, std::ostream& out) {
  const int from = require_n(c, 4);
  const int to = c.n_to.value_or(from);
  if (to < from) throw UsageError("bounds: --to must be at least --n");
  emit(c.out_path, bounds_csv(from, to, c.seed), out);
  return kCertified;
}

int cmd_oracle(const RunConfig& c, std::ostream& out) {
  const auto s = c.points_path ? load_points(*c.points_path) : gen_convex(require_n(c, 3));
  if (edge_count(s.size()) > kPseudoGrundyNodeCap)
    throw UsageError("oracle: " + std::to_string(edge_count(s.size())) + " edges exceeds the exhaustive-search cap of " +
                     std::to_string(kPseudoGrundyNodeCap));
  std::optional<Criterion> only;
  if (c.criterion) only = criterion_flag(c, Criterion::Crossing);
  emit(c.out_path, oracle_json(s, only), out);
  return kCertified;
}

int cmd_render(const RunConfig& c, std::ostream& out) {
  if (!c.points_path || !c.coloring_path) throw UsageError("render: --points and --coloring are required");
  const auto s = load_points(*c.points_path);
  EdgeColoring col;
  try {
    col = coloring_from_json(slurp(*c.coloring_path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (col.n != s.size()) throw UsageError("render: coloring and point set sizes differ");
  emit(c.out_path, render_svg(s, col, c.only_class), out);
  return kCertified;
}

}  // namespace

ColorOutcome color(const RunConfig& c) {
  if (!c.construction) throw UsageError("color: --construction is required");
  const std::string& name = *c.construction;
  ColorOutcome o;
  bool need_proper = false;

  auto fixed_criterion = [&](Criterion required) {
    if (criterion_flag(c, required) != required)
      throw UsageError(name + " requires --criterion " + std::string(to_string(required)));
  };
  auto no_points = [&] {
    if (c.points_path) throw UsageError(name + " builds its own convex point set; drop --points");
  };

  try {
    if (name == "circulant") {
      fixed_criterion(Criterion::Intersection);
      no_points();
      auto built = circulant_coloring(require_n(c, 3));
      o.points = std::move(built.points);
      o.coloring = std::move(built.coloring);
      need_proper = true;
    } else if (name == "bipartition") {
      fixed_criterion(Criterion::Crossing);
      no_points();
      auto built = crossing_bipartition_coloring(require_n(c, 8));
      o.points = std::move(built.points);
      o.coloring = std::move(built.coloring);
    } else if (name == "halving") {
      fixed_criterion(Criterion::Disjointness);
      o.points = general_points(c, 5);
      o.coloring = halving_line_coloring(o.points);
    } else if (name == "triangle") {
      fixed_criterion(Criterion::NonCrossing);
      o.points = general_points(c, 3);
      o.coloring = triangle_coloring(o.points);
    } else if (name == "transversal") {
      const auto crit = criterion_flag(c, Criterion::Crossing);
      if (crit != Criterion::Crossing && crit != Criterion::Intersection)
        throw UsageError("transversal requires --criterion crossing or intersection");
      o.points = general_points(c, 8);
      o.coloring = transversal_coloring(o.points, crit);
    } else {
      throw UsageError("unknown construction '" + name + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto g = build_conflict_graph(o.points, o.coloring.criterion);
  const auto report = verify(g, o.coloring);
  o.certified = report.grundy_property && (!need_proper || report.proper);
  ojson j;
  j["construction"] = name;
  j["n"] = o.points.size();
  j["criterion"] = std::string(to_string(o.coloring.criterion));
  j["constructed_colors"] = o.coloring.constructed_color_count();
  j["certificate"] = need_proper ? "grundy" : "pseudo-grundy";
  j["certified"] = o.certified;
  j["report"] = ojson::parse(report_to_json(report, g));
  o.report_json = j.dump() + "\n";
  o.coloring_json = coloring_to_json(o.coloring);
  return o;
}

std::string bounds_csv(int n_from, int n_to, std::uint64_t seed) {
  std::ostringstream os;
  os << "n,criterion,setting,lower,upper,achieved\n";
  auto achieved = [](const std::function<EdgeColoring()>& build) -> std::string {
    try {
      return std::to_string(build().color_count());
    } catch (const std::exception&) {
      return "";  // construction not applicable at this n
    }
  };
  for (int n = n_from; n <= n_to; ++n) {
    auto row = [&](Criterion c, Setting setting, const std::string& upper, const std::string& got) {
      os << n << ',' << to_string(c) << ',' << (setting == Setting::Convex ? "convex" : "general") << ','
         << format_rational(lower_bound_formula(n, c, setting)) << ',' << upper << ',' << got << '\n';
    };
    const auto general = gen_general(n, seed);
    row(Criterion::Intersection, Setting::Convex, std::to_string(counting_upper_bound(n, Criterion::Intersection)),
        achieved([&] { return circulant_coloring(n).coloring; }));
    row(Criterion::Crossing, Setting::Convex, std::to_string(counting_upper_bound(n, Criterion::Crossing)),
        n >= 8 ? achieved([&] { return crossing_bipartition_coloring(n).coloring; }) : "");
    // Upper bounds on the geometric index via the local crossing number.
    const bool quad = n / 20 >= 2;
    row(Criterion::Crossing, Setting::General, std::to_string(lcr_formula(n) + 1),
        quad ? achieved([&] { return transversal_coloring(general, Criterion::Crossing); }) : "");
    row(Criterion::Intersection, Setting::General, std::to_string(lcr_formula(n) + 2 * n - 3),
        quad ? achieved([&] { return transversal_coloring(general, Criterion::Intersection); }) : "");
    row(Criterion::Disjointness, Setting::General, std::to_string(counting_upper_bound(n, Criterion::Disjointness)),
        n >= 5 ? achieved([&] { return halving_line_coloring(general); }) : "");
    row(Criterion::NonCrossing, Setting::General, std::to_string(counting_upper_bound(n, Criterion::NonCrossing)),
        achieved([&] { return triangle_coloring(general); }));
  }
  return os.str();
}

std::string oracle_json(const PointSet& s, std::optional<Criterion> only) {
  ojson j;
  j["n"] = s.size();
  j["convex"] = s.in_convex_position();
  auto& results = j["results"] = ojson::array();
  for (auto c : {Criterion::Crossing, Criterion::Intersection, Criterion::Disjointness, Criterion::NonCrossing}) {
    if (only && *only != c) continue;
    const auto g = build_conflict_graph(s, c);
    ojson r;
    r["criterion"] = std::string(to_string(c));
    r["nodes"] = g.node_count();
    r["pseudo_grundy"] = exact_pseudo_grundy(g);
    if (g.node_count() <= kGrundyNodeCap) r["grundy"] = exact_grundy(g);
    else r["grundy"] = nullptr;
    const bool counted = s.size() >= 4 && ((c != Criterion::Crossing && c != Criterion::Intersection) || s.in_convex_position());
    if (counted) r["counting_upper_bound"] = counting_upper_bound(s.size(), c);
    else r["counting_upper_bound"] = nullptr;
    results.push_back(std::move(r));
  }
  return j.dump() + "\n";
}

std::string render_svg(const PointSet& s, const EdgeColoring& col, std::optional<int> only_class) {
  constexpr double kSize = 800, kMargin = 20;
  std::int64_t min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (s.size() > 0) {
    min_x = max_x = s[0].x;
    min_y = max_y = s[0].y;
    for (const auto& p : s.points()) {
      min_x = std::min(min_x, p.x), max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y), max_y = std::max(max_y, p.y);
    }
  }
  const double span = static_cast<double>(std::max<std::int64_t>({max_x - min_x, max_y - min_y, 1}));
  const double scale = (kSize - 2 * kMargin) / span;
  auto sx = [&](const Point& p) { return fixed2(kMargin + static_cast<double>(p.x - min_x) * scale); };
  // SVG's y axis points down; flip so the picture keeps its orientation.
  auto sy = [&](const Point& p) { return fixed2(kSize - kMargin - static_cast<double>(p.y - min_y) * scale); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  os << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  const auto edges = all_edges(col.n);
  std::vector<int> drawn;
  for (int u = 0; u < col.size(); ++u) {
    const int c = col.color(u);
    if (c > 0 && (!only_class || *only_class == c)) drawn.push_back(u);
  }
  std::stable_sort(drawn.begin(), drawn.end(), [&](int a, int b) { return col.color(a) < col.color(b); });
  for (int u : drawn) {
    const auto& e = edges[static_cast<std::size_t>(u)];
    const int c = col.color(u);
    // Golden-angle hue stepping keeps neighbouring class numbers apart.
    const double hue = std::fmod(c * 137.50776405003785, 360.0);
    os << "<line x1=\"" << sx(s[e.a]) << "\" y1=\"" << sy(s[e.a]) << "\" x2=\"" << sx(s[e.b]) << "\" y2=\""
       << sy(s[e.b]) << "\" stroke=\"hsl(" << fixed2(hue) << ",70%,45%)\" stroke-width=\"1.5\" data-color=\"" << c
       << "\"/>\n";
  }
  for (int i = 0; i < s.size(); ++i)
    os << "<circle cx=\"" << sx(s[i]) << "\" cy=\"" << sy(s[i]) << "\" r=\"4\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto fail = [&](int code, const std::string& reason) {
    err << ojson{{"error", reason}, {"exit_code", code}}.dump() << '\n';
    return code;
  };
  try {
    if (config.command == "gen") return cmd_gen(config, out);
    if (config.command == "color") return cmd_color(config, out);
    if (config.command == "verify") return cmd_verify(config, out);
    if (config.command == "bounds") return cmd_bounds(config, out);
    if (config.command == "oracle") return cmd_oracle(config, out);
    if (config.command == "render") return cmd_render(config, out);
    return fail(kUsageError, "unknown command '" + config.command + "'");
  } catch (const UsageError& e) {
    return fail(kUsageError, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kUsageError, e.what());
  } catch (const std::exception& e) {
    return fail(kCertificationFailed, e.what());
  }
}

}  // namespace geogrundy::cli
