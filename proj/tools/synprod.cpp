// synprod: solve hydrogen distribution instances, print product statistics,
// export automata and networks, and run the propagation equivalence check.

#include <synprod/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common(CLI::App* sub, synprod::cli::RunConfig& cfg, std::string& format, bool& all) {
  auto* inst = sub->add_option("--instance", cfg.instance, "Instance identifier");
  sub->add_flag("--all", all, "Every instance in the input")->excludes(inst);
  sub->add_option("--input", cfg.input, "Instance file (defaults to the bundled corpus)")->check(CLI::ExistingFile);
  sub->add_option("--format", format, "Output format: text, json, dot or csv")
      ->check(CLI::IsMember({"text", "json", "dot", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace synprod::cli;
  RunConfig cfg;
  std::string format = "text";
  bool all = false;

  CLI::App app{"Synchronised automata products for cyclic container routing"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Compute optimal schedules");
  add_common(solve, cfg, format, all);
  solve->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* stats = app.add_subcommand("stats", "Product size statistics per container count");
  add_common(stats, cfg, format, all);

  auto* exp = app.add_subcommand("export", "Write the reduced product (dot), its letter table (csv) or network (json)");
  add_common(exp, cfg, format, all);
  exp->add_option("--combo", cfg.combo, "Route system index (0-based)");
  exp->add_option("--columns", cfg.columns, "Number of columns n for the network (default: first minimal solution)");
  exp->add_option("--output", cfg.output, "Destination file (default stdout)");

  auto* gac = app.add_subcommand("gac-check", "Compare propagation with exhaustive enumeration on random systems");
  gac->add_option("--seed", cfg.seed, "Random seed");
  gac->add_option("--cases", cfg.cases, "Number of random systems");
  gac->add_option("--format", format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (solve->parsed()) cfg.command = Command::Solve;
  if (stats->parsed()) cfg.command = Command::Stats;
  if (exp->parsed()) cfg.command = Command::Export;
  if (gac->parsed()) cfg.command = Command::GacCheck;
  cfg.format = *parse_format(format);
  if (all) cfg.instance.reset();

  return run(cfg, {std::cout, std::cerr});
}
