#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace adyne::cli {

/// Locale-independent formatting with 12 significant digits; identical bytes
/// for identical values on every run.
std::string format_double(double value);

/// RFC-4180-style quoting: fields containing comma, quote, CR or LF are
/// quoted, embedded quotes doubled.
std::string csv_field(std::string_view raw);

std::string csv_line(const std::vector<std::string>& fields);

/// Split one CSV line honoring quoted fields.
std::vector<std::string> parse_csv_line(const std::string& line);

/// One output row of a sweep: a (scheme, alpha, delay, estimator) cell with
/// its statistics and the matching closed-form reference values.
struct SweepRow {
  std::string scheme;
  double alpha = 0.0;
  double n_bar = 0.0;
  std::int64_t delay_steps = 0;
  double tau = 0.0;
  std::string estimator;
  double holevo_var = 0.0;
  double moment_var = 0.0;
  double std_error = 0.0;
  double baseline_var = 0.0;
  double excess_var = 0.0;
  double mean_abs_b = 0.0;
  double mean_inv_np = 0.0;
  std::int64_t invalid_count = 0;
  double theory_limit = 0.0;
  double theory_corrected_limit = 0.0;
  double heterodyne_ref = 0.0;
};

inline constexpr std::array<const char*, 17> kSweepColumns = {
    "scheme", "alpha", "n_bar", "delay_steps", "tau", "estimator",
    "holevo_var", "moment_var", "std_error", "baseline_var", "excess_var",
    "mean_abs_b", "mean_inv_np", "invalid_count", "theory_limit",
    "theory_corrected_limit", "heterodyne_ref"};

std::string write_sweep_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace adyne::cli
