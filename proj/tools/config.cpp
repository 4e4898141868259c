#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace adyne::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string token;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!token.empty()) out.push_back(std::move(token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) out.push_back(std::move(token));
  return out;
}

const std::vector<std::string> kKnownKeys = {
    "master_seed", "n_steps", "delays", "alphas", "schemes", "estimators", "n_traj",
    "out_dir", "true_phase", "baseline_window", "simplified_denom",
    "lin_alpha", "lin_taus", "lin_paths", "lin_steps", "lin_v1",
    "theory_n_bars", "theory_taus", "trajectory_index",
};

}  // namespace

KeyValueFile KeyValueFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_string(buffer.str(), path.string());
}

KeyValueFile KeyValueFile::from_string(const std::string& text, const std::string& origin) {
  KeyValueFile kv;
  kv.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
    }
    if (kv.values_.count(key)) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    kv.values_[key] = value;
  }
  return kv;
}

std::string KeyValueFile::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(origin_ + ": missing required key '" + key + "'");
  return it->second;
}

std::string KeyValueFile::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::int64_t KeyValueFile::get_int(const std::string& key) const {
  try {
    return std::stoll(get_string(key));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' is not an integer");
  }
}

std::int64_t KeyValueFile::get_int(const std::string& key, std::int64_t fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::uint64_t KeyValueFile::get_uint(const std::string& key) const {
  try {
    return std::stoull(get_string(key));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' is not an unsigned integer");
  }
}

std::uint64_t KeyValueFile::get_uint(const std::string& key, std::uint64_t fallback) const {
  return has(key) ? get_uint(key) : fallback;
}

double KeyValueFile::get_double(const std::string& key) const {
  try {
    return std::stod(get_string(key));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' is not a number");
  }
}

double KeyValueFile::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

std::vector<std::string> KeyValueFile::get_tokens(const std::string& key) const {
  return split_tokens(get_string(key));
}

std::vector<double> KeyValueFile::get_doubles(const std::string& key) const {
  std::vector<double> out;
  for (const std::string& t : get_tokens(key)) {
    try {
      out.push_back(std::stod(t));
    } catch (const std::exception&) {
      throw ConfigError(origin_ + ": key '" + key + "': '" + t + "' is not a number");
    }
  }
  return out;
}

std::vector<std::int64_t> KeyValueFile::get_ints(const std::string& key) const {
  std::vector<std::int64_t> out;
  for (const std::string& t : get_tokens(key)) {
    try {
      out.push_back(std::stoll(t));
    } catch (const std::exception&) {
      throw ConfigError(origin_ + ": key '" + key + "': '" + t + "' is not an integer");
    }
  }
  return out;
}

void KeyValueFile::require_known_keys(const std::vector<std::string>& known) const {
  for (const auto& [key, value] : values_) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError(origin_ + ": unknown key '" + key + "'");
    }
  }
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
  return from_keyvalues(KeyValueFile::load(path));
}

ExperimentConfig ExperimentConfig::from_keyvalues(const KeyValueFile& kv) {
  kv.require_known_keys(kKnownKeys);
  ExperimentConfig cfg;
  cfg.master_seed = kv.get_uint("master_seed");
  cfg.n_steps = kv.get_int("n_steps");
  if (kv.has("delays")) cfg.delays = kv.get_ints("delays");
  if (kv.has("alphas")) cfg.alphas = kv.get_doubles("alphas");

  DelayDenominator denom = DelayDenominator::current_time;
  const std::string denom_token = kv.get_string("simplified_denom", "current");
  if (denom_token == "emission") {
    denom = DelayDenominator::emission_time;
  } else if (denom_token != "current") {
    throw ConfigError("simplified_denom must be 'current' or 'emission'");
  }

  if (kv.has("schemes")) {
    for (const std::string& token : kv.get_tokens("schemes")) {
      auto scheme = FeedbackScheme::parse(token);
      if (!scheme) throw ConfigError("unknown scheme '" + token + "'");
      scheme->denom = denom;
      cfg.schemes.push_back(*scheme);
    }
  }

  if (kv.has("estimators")) {
    for (const std::string& token : kv.get_tokens("estimators")) {
      auto est = parse_estimator(token);
      if (!est) throw ConfigError("unknown estimator '" + token + "'");
      cfg.estimators.push_back(*est);
    }
  } else {
    cfg.estimators = {Estimator::feedback, Estimator::arg_a, Estimator::arg_c};
  }

  cfg.n_traj = kv.get_int("n_traj", cfg.n_traj);
  cfg.out_dir = kv.get_string("out_dir", cfg.out_dir);
  cfg.true_phase = kv.get_double("true_phase", cfg.true_phase);
  cfg.baseline_window = static_cast<int>(kv.get_int("baseline_window", cfg.baseline_window));

  cfg.lin_alpha = kv.get_double("lin_alpha", cfg.lin_alpha);
  if (kv.has("lin_taus")) cfg.lin_taus = kv.get_doubles("lin_taus");
  cfg.lin_paths = kv.get_int("lin_paths", cfg.lin_paths);
  cfg.lin_steps = kv.get_int("lin_steps", cfg.lin_steps);
  cfg.lin_v1 = kv.get_double("lin_v1", cfg.lin_v1);

  if (kv.has("theory_n_bars")) cfg.theory_n_bars = kv.get_doubles("theory_n_bars");
  if (kv.has("theory_taus")) {
    cfg.theory_taus = kv.get_doubles("theory_taus");
  } else {
    for (int i = 0; i <= 24; ++i) cfg.theory_taus.push_back(std::pow(10.0, -4.0 + i / 6.0));
  }
  return cfg;
}

void ExperimentConfig::validate_sweep_fields() const {
  if ((n_steps & (n_steps - 1)) != 0 || n_steps < 2) {
    throw ConfigError("n_steps must be a power of two >= 2");
  }
  if (delays.empty()) throw ConfigError("delays must be a nonempty list");
  if (alphas.empty()) throw ConfigError("alphas must be a nonempty list");
  if (schemes.empty()) throw ConfigError("schemes must be a nonempty list");
  if (estimators.empty()) throw ConfigError("estimators must be a nonempty list");
  if (n_traj < 2) throw ConfigError("n_traj must be >= 2");
  if (baseline_window < 1) throw ConfigError("baseline_window must be >= 1");
  if (delays.front() != 1) throw ConfigError("delays must start at 1");
  for (std::size_t i = 0; i < delays.size(); ++i) {
    const std::int64_t d = delays[i];
    if (d < 1 || d > n_steps / 4) throw ConfigError("each delay must lie in [1, n_steps/4]");
    if ((d & (d - 1)) != 0) throw ConfigError("each delay must be a power of two");
    if (i > 0 && delays[i] <= delays[i - 1]) throw ConfigError("delays must be sorted ascending");
  }
  for (double a : alphas) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw ConfigError("alphas must be finite and >= 0");
  }
}

}  // namespace adyne::cli
