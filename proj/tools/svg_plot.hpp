#pragma once

#include <string>
#include <vector>

namespace adyne::cli {

enum class Marker { none, circle, cross, square };

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color;  // empty: assigned from the palette
  Marker marker = Marker::none;
  bool line = true;
  bool dashed = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = true;
  bool log_y = true;
  std::vector<Series> series;
};

/// Render a self-contained SVG 1.1 document. Non-finite points are skipped;
/// on log axes non-positive points are skipped as well. Deterministic output
/// byte-for-byte for identical input.
std::string render_svg(const PlotSpec& spec);

}  // namespace adyne::cli
