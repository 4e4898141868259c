#include <CLI11.hpp>
#include <cstdint>
#include <string>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"adyne - adaptive dyne phase-measurement simulator"};
  app.require_subcommand(1);

  adyne::cli::RunOptions opt;
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool have_out = false;
  bool have_seed = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "experiment config file (key = value)")->required();
    sub->add_option("--out", out_dir, "output directory (overrides config)")
        ->each([&](const std::string&) { have_out = true; });
    sub->add_option("--seed", seed, "master seed (overrides config)")
        ->each([&](const std::string&) { have_seed = true; });
    sub->add_option("--threads", opt.threads, "worker threads; affects speed only");
  };

  CLI::App* sweep = app.add_subcommand("sweep", "run the delay sweep, write CSV and SVG figures");
  add_common(sweep);
  CLI::App* markone =
      app.add_subcommand("markone-check", "fit excess-variance slopes against the tau/2 law");
  add_common(markone);
  CLI::App* theory = app.add_subcommand("theory", "tabulate the closed-form reference curves");
  add_common(theory);
  CLI::App* traj = app.add_subcommand("traj", "dump one trajectory step by step");
  add_common(traj);
  traj->add_option("--index", opt.trajectory_index, "trajectory index within the ensemble");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  opt.config_path = config_path;
  if (have_out) opt.out_dir = out_dir;
  if (have_seed) opt.seed = seed;

  if (sweep->parsed()) return adyne::cli::cmd_sweep(opt);
  if (markone->parsed()) return adyne::cli::cmd_markone_check(opt);
  if (theory->parsed()) return adyne::cli::cmd_theory(opt);
  if (traj->parsed()) return adyne::cli::cmd_traj(opt);
  return 2;
}
