#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epf/config.hpp"
#include "epf/harness.hpp"
#include "epf/quadrature.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitSolverFailure = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw epf::structural_error("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential-family projection filter experiments"};
  app.require_subcommand(1);

  // run
  std::string run_config;
  std::vector<std::string> overrides;
  std::string out_dir;
  std::uint64_t seed_override = 0;
  bool seed_given = false;
  int threads = 1;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment end to end");
  run_cmd->add_option("config", run_config, "experiment config file")->required();
  run_cmd->add_option("--override", overrides, "section.key=value config override (repeatable)");
  run_cmd->add_option("--out", out_dir, "output directory (defaults to the config's output.dir)");
  run_cmd->add_option("--seed", seed_override, "seed override")->each([&](const std::string&) {
    seed_given = true;
  });
  run_cmd->add_option("--threads", threads, "reserved; solvers currently run sequentially");

  // validate
  std::string validate_config;
  std::vector<std::string> validate_overrides;
  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a config, then exit");
  validate_cmd->add_option("config", validate_config, "experiment config file")->required();
  validate_cmd->add_option("--override", validate_overrides, "section.key=value config override");

  // grids
  std::string grid_rule = "gauss_patterson";
  int grid_dim = 1;
  int grid_level = 1;
  int grid_count = 0;
  bool grid_elide = false;
  std::string grid_out;
  auto* grids_cmd = app.add_subcommand("grids", "Dump a quadrature grid as CSV");
  grids_cmd->add_option("--rule", grid_rule, "gauss_patterson|clenshaw_curtis|gauss_chebyshev|halton");
  grids_cmd->add_option("--dim", grid_dim, "dimension");
  grids_cmd->add_option("--level", grid_level, "sparse-grid level");
  grids_cmd->add_option("--count", grid_count, "node count (gauss_chebyshev / halton)");
  grids_cmd->add_flag("--elide-boundary", grid_elide, "drop boundary nodes");
  grids_cmd->add_option("--out", grid_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) {
      epf::parse_config_file(validate_config, validate_overrides);
      std::cout << "ok\n";
      return 0;
    }
    if (*grids_cmd) {
      epf::QuadratureGrid grid;
      if (grid_rule == "halton") {
        grid = epf::halton(grid_dim, grid_count);
      } else if (grid_rule == "gauss_chebyshev" && grid_count > 0) {
        grid = epf::gauss_chebyshev(grid_count);
      } else {
        epf::Rule1D rule{epf::rule_kind_from_string(grid_rule)};
        grid = epf::smolyak(rule, grid_dim, grid_level, grid_elide);
      }
      if (grid_out.empty()) {
        epf::write_csv(grid, std::cout);
      } else {
        std::ofstream out(grid_out);
        if (!out) throw epf::structural_error("cannot write '" + grid_out + "'");
        epf::write_csv(grid, out);
      }
      return 0;
    }
    // run
    const std::string text = read_file(run_config);
    epf::ExperimentConfig cfg = epf::parse_config_text(text, overrides);
    epf::RunOptions options;
    options.out_dir = out_dir.empty() ? cfg.output_dir : out_dir;
    options.fingerprint = epf::config_fingerprint(text, overrides);
    options.seed = seed_given ? seed_override : cfg.seed;
    options.threads = threads;
    const auto result = epf::run_experiment(cfg, options);
    for (const auto& report : result.reports) {
      std::fprintf(stderr, "%-16s %8.2fs%s\n", report.name.c_str(), report.wall_seconds,
                   report.failed ? ("  FAILED: " + report.message).c_str() : "");
    }
    return result.any_failed ? kExitSolverFailure : 0;
  } catch (const epf::Error& e) {
    const bool validation = e.kind() == epf::Error::Kind::structural ||
                            e.kind() == epf::Error::Kind::domain ||
                            e.kind() == epf::Error::Kind::capability;
    std::fprintf(stderr, "error: %s\n", e.what());
    return validation ? kExitValidation : kExitSolverFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSolverFailure;
  }
}
