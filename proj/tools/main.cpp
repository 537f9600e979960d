#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "geogrundy/cli.hpp"

namespace {

using geogrundy::cli::RunConfig;

template <class T>
void optional_flag(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grundy and pseudo-Grundy edge colourings of complete geometric graphs"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&config](CLI::App* sub) {
    optional_flag(sub, "--n", config.n, "number of points");
    sub->add_option("--seed", config.seed, "seed for generated point sets");
    optional_flag(sub, "--criterion", config.criterion, "crossing|intersection|disjointness|noncrossing");
    optional_flag(sub, "--points", config.points_path, "point file");
    optional_flag(sub, "--out", config.out_path, "output file (default: stdout)");
  };

  auto* gen = app.add_subcommand("gen", "generate a point set");
  add_common(gen);
  gen->add_flag("--convex", config.convex, "convex position instead of random general position");

  auto* color = app.add_subcommand("color", "build, complete and certify a colouring");
  add_common(color);
  optional_flag(color, "--construction", config.construction, "circulant|bipartition|halving|triangle|transversal");
  optional_flag(color, "--report", config.report_path, "report JSON file (default: stdout)");
  optional_flag(color, "--points-out", config.points_out_path, "write the point set used");

  auto* verify = app.add_subcommand("verify", "certify a colouring file");
  add_common(verify);
  optional_flag(verify, "--coloring", config.coloring_path, "colouring JSON");
  optional_flag(verify, "--report", config.report_path, "report JSON file (default: stdout)");
  verify->add_flag("--require-proper", config.require_proper, "also require a proper colouring");

  auto* bounds = app.add_subcommand("bounds", "CSV table of lower/upper bounds and achieved colour counts");
  add_common(bounds);
  optional_flag(bounds, "--to", config.n_to, "last n (default: --n)");

  auto* oracle = app.add_subcommand("oracle", "exact indices of a small instance");
  add_common(oracle);

  auto* render = app.add_subcommand("render", "SVG drawing of a coloured point set");
  add_common(render);
  optional_flag(render, "--coloring", config.coloring_path, "colouring JSON");
  optional_flag(render, "--class", config.only_class, "draw only this colour class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : geogrundy::cli::kUsageError;
  }
  config.command = app.get_subcommands().front()->get_name();
  return geogrundy::cli::run(config, std::cout, std::cerr);
}
