#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adyne/feedback.hpp"
#include "adyne/stats.hpp"

namespace adyne::cli {

/// Bad or missing configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat `key = value` file. Lists are whitespace- or comma-separated values;
/// `#` starts a comment. Unknown keys are rejected to catch typos.
class KeyValueFile {
 public:
  static KeyValueFile load(const std::filesystem::path& path);
  static KeyValueFile from_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::uint64_t get_uint(const std::string& key) const;
  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::vector<std::string> get_tokens(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<std::int64_t> get_ints(const std::string& key) const;

  /// Throws ConfigError if any key is not in `known`.
  void require_known_keys(const std::vector<std::string>& known) const;

 private:
  std::map<std::string, std::string> values_;
  std::string origin_;
};

/// Parameters of a sweep-style experiment.
struct ExperimentConfig {
  std::uint64_t master_seed = 1;
  std::int64_t n_steps = 1 << 14;
  std::vector<std::int64_t> delays;
  std::vector<double> alphas;
  std::vector<FeedbackScheme> schemes;
  std::vector<Estimator> estimators;
  std::int64_t n_traj = 4000;
  std::string out_dir = "results";
  double true_phase = 0.0;
  int baseline_window = 6;

  // markone-check extras
  double lin_alpha = 100.0;
  std::vector<double> lin_taus = {0.0, 5e-4, 1e-3, 2e-3};
  std::int64_t lin_paths = 10000;
  std::int64_t lin_steps = 16000;
  double lin_v1 = 0.01;

  // theory extras
  std::vector<double> theory_n_bars = {100.0, 400.0, 10000.0};
  std::vector<double> theory_taus;  // default: log grid 1e-4..1

  static ExperimentConfig from_file(const std::filesystem::path& path);
  static ExperimentConfig from_keyvalues(const KeyValueFile& kv);

  void validate_sweep_fields() const;
};

}  // namespace adyne::cli
