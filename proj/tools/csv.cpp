#include "csv.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace adyne::cli {

std::string format_double(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view raw) {
  const bool needs_quotes = raw.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(raw);
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  out += '\n';
  return out;
}

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

std::string write_sweep_csv(const std::vector<SweepRow>& rows) {
  std::vector<std::string> header(kSweepColumns.begin(), kSweepColumns.end());
  std::string out = csv_line(header);
  for (const SweepRow& r : rows) {
    out += csv_line({r.scheme, format_double(r.alpha), format_double(r.n_bar),
                     std::to_string(r.delay_steps), format_double(r.tau), r.estimator,
                     format_double(r.holevo_var), format_double(r.moment_var),
                     format_double(r.std_error), format_double(r.baseline_var),
                     format_double(r.excess_var), format_double(r.mean_abs_b),
                     format_double(r.mean_inv_np), std::to_string(r.invalid_count),
                     format_double(r.theory_limit), format_double(r.theory_corrected_limit),
                     format_double(r.heterodyne_ref)});
  }
  return out;
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::vector<SweepRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = parse_csv_line(line);
    if (!header_seen) {
      if (fields.size() != kSweepColumns.size()) {
        throw std::runtime_error("sweep CSV: unexpected column count in header");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != kSweepColumns.size()) {
      throw std::runtime_error("sweep CSV: unexpected column count in row");
    }
    SweepRow r;
    r.scheme = fields[0];
    r.alpha = std::strtod(fields[1].c_str(), nullptr);
    r.n_bar = std::strtod(fields[2].c_str(), nullptr);
    r.delay_steps = std::strtoll(fields[3].c_str(), nullptr, 10);
    r.tau = std::strtod(fields[4].c_str(), nullptr);
    r.estimator = fields[5];
    r.holevo_var = std::strtod(fields[6].c_str(), nullptr);
    r.moment_var = std::strtod(fields[7].c_str(), nullptr);
    r.std_error = std::strtod(fields[8].c_str(), nullptr);
    r.baseline_var = std::strtod(fields[9].c_str(), nullptr);
    r.excess_var = std::strtod(fields[10].c_str(), nullptr);
    r.mean_abs_b = std::strtod(fields[11].c_str(), nullptr);
    r.mean_inv_np = std::strtod(fields[12].c_str(), nullptr);
    r.invalid_count = std::strtoll(fields[13].c_str(), nullptr, 10);
    r.theory_limit = std::strtod(fields[14].c_str(), nullptr);
    r.theory_corrected_limit = std::strtod(fields[15].c_str(), nullptr);
    r.heterodyne_ref = std::strtod(fields[16].c_str(), nullptr);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace adyne::cli
