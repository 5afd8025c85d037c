// Command-line runner for optimal dissipative-transport trajectories.
//
// Subcommands:
//   validate  run the numerical invariant suite and print a pass/fail table
//   solve     solve one configuration cell; write trajectory + comparison CSV
//   sweep     solve every t_f in the config's sweep list
//   compare   like sweep, but only the comparison table (no trajectory dumps)
//   kernels   dump sampled kernels and transition matrix elements as CSV
//
// Exit codes: 0 success, 1 configuration error, 2 numerical failure.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "acqudit/runner.hpp"
#include "acqudit/validation.hpp"

namespace {

struct CommonOpts {
  std::string config;
  std::string out = "out";
  int jobs = 1;
  double tol = -1.0;  // <0: keep config value
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_config) {
  auto* c = cmd->add_option("--config", opts.config, "path to a JSON run configuration");
  if (needs_config) c->required();
  cmd->add_option("--out", opts.out, "output directory");
  cmd->add_option("--jobs", opts.jobs, "parallel workers for sweep cells and tables")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", opts.tol, "override solver tolerance");
}

acqudit::runner::RunConfig load(const CommonOpts& opts) {
  acqudit::runner::RunConfig cfg = acqudit::runner::load_config(opts.config);
  if (opts.tol > 0.0) cfg.solver.tol = opts.tol;
  return cfg;
}

int run_validate(int jobs) {
  const auto results = acqudit::validation::run_validation(jobs);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    std::printf("%-*s  %s  %s\n", static_cast<int>(width), r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.c_str());
  }
  std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal trajectories for trapped-wavepacket transport through a phonon bath"};
  app.require_subcommand(1);

  CommonOpts validate_opts, solve_opts, sweep_opts, compare_opts, kernel_opts;
  CLI::App* validate = app.add_subcommand("validate", "run the numerical invariant suite");
  validate->add_option("--jobs", validate_opts.jobs, "parallel workers")
      ->check(CLI::PositiveNumber);
  CLI::App* solve = app.add_subcommand("solve", "solve a single configuration cell");
  add_common(solve, solve_opts, true);
  CLI::App* sweep = app.add_subcommand("sweep", "solve every t_f in the sweep list");
  add_common(sweep, sweep_opts, true);
  CLI::App* compare = app.add_subcommand("compare", "comparison table only");
  add_common(compare, compare_opts, true);
  CLI::App* kernels_cmd = app.add_subcommand("kernels", "dump kernels and matrix elements");
  add_common(kernels_cmd, kernel_opts, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(validate_opts.jobs);
    if (solve->parsed()) {
      const auto out = acqudit::runner::run(load(solve_opts), solve_opts.out, solve_opts.jobs);
      std::printf("wrote %s\n", out.manifest.string().c_str());
      return 0;
    }
    if (sweep->parsed()) {
      const auto cfg = load(sweep_opts);
      if (cfg.sweep.empty()) throw acqudit::ConfigError("sweep requires a 'sweep' list");
      const auto out = acqudit::runner::run(cfg, sweep_opts.out, sweep_opts.jobs);
      std::printf("wrote %s (%zu cells)\n", out.manifest.string().c_str(), out.cells.size());
      return 0;
    }
    if (compare->parsed()) {
      const auto out = acqudit::runner::run(load(compare_opts), compare_opts.out,
                                            compare_opts.jobs, /*write_trajectories=*/false);
      std::printf("wrote %s\n", out.comparison_csv.string().c_str());
      return 0;
    }
    if (kernels_cmd->parsed()) {
      acqudit::runner::dump_kernels(load(kernel_opts), kernel_opts.out, kernel_opts.jobs);
      std::printf("wrote kernel dumps to %s\n", kernel_opts.out.c_str());
      return 0;
    }
  } catch (const acqudit::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const acqudit::Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
