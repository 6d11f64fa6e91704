#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "reescm/errors.hpp"
#include "reescm/version.hpp"

using namespace reescm;

int main(int argc, char** argv) {
  CLI::App app{"Sequential Cohen-Macaulayness of Rees algebras of Stanley-Reisner rings"};
  app.set_version_flag("--version", std::string("reescm ") + kVersion);
  app.require_subcommand(1);

  cli::CommonOptions common;
  app.add_flag("--pretty", common.pretty, "Human-readable tables instead of JSON");

  std::string file;
  std::string field_spec = "q";
  std::string sub_file;
  bool nonincreasing = false;

  auto* analyze = app.add_subcommand("analyze", "Facets, f/h-vectors, Stanley-Reisner data");
  analyze->add_option("file", file, "Input .cplx file")->required();

  auto* shelling = app.add_subcommand("shelling", "Search for a shelling order");
  shelling->add_option("file", file, "Input .cplx file")->required();
  shelling->add_flag("--nonincreasing", nonincreasing,
                     "Restrict to orders with non-increasing facet dimensions");

  auto* dimfilt = app.add_subcommand("dimfilt", "Dimension filtration and quotient series");
  dimfilt->add_option("file", file, "Input .cplx file")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Exact Hilbert series");
  hilbert->add_option("file", file, "Input .cplx file")->required();
  hilbert->add_option("--sub", sub_file, "Nested subcomplex: series of the interval");

  auto* homology = app.add_subcommand("homology", "Reduced homology and CM oracles");
  homology->add_option("file", file, "Input .cplx file")->required();
  homology->add_option("--field", field_spec, "Coefficient field: q or p:<prime>");

  auto* rees = app.add_subcommand("rees-check",
                                  "Is the Rees algebra sequentially Cohen-Macaulay?");
  rees->add_option("file", file, "Input .cplx file")->required();

  SweepOptions sweep_opts;
  std::string mode = "exhaustive";
  bool seed_given = false;
  auto* sweep = app.add_subcommand("sweep", "Exhaustive / randomized property sweeps");
  sweep->add_option("--max-vertices", sweep_opts.max_vertices, "Vertex budget")
      ->check(CLI::Range(1, 64));
  sweep->add_option("--mode", mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  sweep->add_option("--seed", sweep_opts.seed, "RNG seed (required for random mode)")
      ->each([&](const std::string&) { seed_given = true; });
  sweep->add_option("--count", sweep_opts.count, "Number of random complexes");
  sweep->add_option("--field", field_spec, "Homology oracle field: q or p:<prime>");

  CLI11_PARSE(app, argc, argv);

  auto run = [&](const std::string& name, const std::function<int()>& fn) {
    return cli::run_command(name, common, std::cout, fn);
  };

  if (analyze->parsed())
    return run("analyze", [&] { return cli::cmd_analyze(file, common, std::cout); });
  if (shelling->parsed())
    return run("shelling",
               [&] { return cli::cmd_shelling(file, nonincreasing, common, std::cout); });
  if (dimfilt->parsed())
    return run("dimfilt", [&] { return cli::cmd_dimfilt(file, common, std::cout); });
  if (hilbert->parsed())
    return run("hilbert", [&] {
      std::optional<std::string> sub;
      if (!sub_file.empty()) sub = sub_file;
      return cli::cmd_hilbert(file, sub, common, std::cout);
    });
  if (homology->parsed())
    return run("homology", [&] {
      return cli::cmd_homology(file, cli::parse_field(field_spec), common, std::cout);
    });
  if (rees->parsed())
    return run("rees-check", [&] { return cli::cmd_rees_check(file, common, std::cout); });
  if (sweep->parsed())
    return run("sweep", [&] {
      if (mode == "random") {
        if (!seed_given) throw Error("random mode requires --seed");
        if (sweep_opts.count == 0) throw Error("random mode requires --count > 0");
        sweep_opts.mode = SweepOptions::Mode::random;
      } else {
        if (sweep_opts.max_vertices > 7)
          throw Error("exhaustive mode supports at most 7 vertices");
        sweep_opts.mode = SweepOptions::Mode::exhaustive;
      }
      sweep_opts.homology_field = cli::parse_field(field_spec);
      return cli::cmd_sweep(sweep_opts, common, std::cout);
    });
  return 2;
}
