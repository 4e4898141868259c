#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace adyne::cli {

struct RunOptions {
  std::filesystem::path config_path;
  std::optional<std::string> out_dir;       // overrides the config's out_dir
  std::optional<std::uint64_t> seed;        // overrides the config's master_seed
  int threads = 0;                          // 0 = hardware pick; never affects results
  std::int64_t trajectory_index = 0;        // traj subcommand only
};

// Exit codes: 0 success, 2 config error, 3 runtime or statistical failure.
int cmd_sweep(const RunOptions& opt);
int cmd_markone_check(const RunOptions& opt);
int cmd_theory(const RunOptions& opt);
int cmd_traj(const RunOptions& opt);

}  // namespace adyne::cli
