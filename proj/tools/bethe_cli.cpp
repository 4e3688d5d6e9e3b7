#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace bethe::cli;
  CLI::App app{"Bethe populations, reproduction and gl(1|1) chains"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";

  auto common = [&](CLI::App* sub, bool random) {
    sub->add_option("--input,-i", cfg.input, "input JSON: a path, - for stdin, or an inline document");
    sub->add_option("--format,-f", format, "json, text or graphviz")
        ->check(CLI::IsMember({"json", "text", "graphviz"}));
    if (random) {
      sub->add_option("--seed", cfg.seed, "RNG seed");
      sub->add_option("--retries", cfg.retries, "retry budget for sampled parameters")->check(CLI::NonNegativeNumber);
      sub->add_flag("--symbolic", cfg.symbolic, "keep the family parameter symbolic");
    }
  };
  common(app.add_subcommand("verify-bae", "check the Bethe ansatz equations for y"), false);
  auto* rep = app.add_subcommand("reproduce", "one reproduction step in every direction");
  common(rep, false);
  rep->add_option("--direction,-d", cfg.direction, "only this direction");
  common(app.add_subcommand("population", "explore the population of y"), true);
  common(app.add_subcommand("operator", "the factored operator of y and its minimal fraction"), false);
  common(app.add_subcommand("flags", "kernel spaces and the flag bijection"), true);
  common(app.add_subcommand("twisted", "explore a twisted population"), true);
  auto* g11 = app.add_subcommand("gl11", "gl(1|1) chain: completeness and spectrum");
  common(g11, false);
  g11->add_option("mode", cfg.gl11_mode, "chain (from --input) or homogeneous")
      ->check(CLI::IsMember({"chain", "homogeneous"}));
  g11->add_option("-p,--sites", cfg.sites, "number of sites of the homogeneous chain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "text" ? Format::Text : format == "graphviz" ? Format::Graphviz : Format::Json;
  return run(cfg, std::cout, std::cerr);
}
