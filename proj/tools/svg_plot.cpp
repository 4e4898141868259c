#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace adyne::cli {

namespace {

constexpr double kWidth = 880;
constexpr double kHeight = 560;
constexpr double kLeft = 84;
constexpr double kRight = 26;
constexpr double kTop = 46;
constexpr double kBottom = 64;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  bool log = false;
  double lo = 0.0;
  double hi = 1.0;

  double fraction(double v) const {
    if (log) return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
    return (v - lo) / (hi - lo);
  }
};

bool usable(const Axis& axis, double v) {
  return std::isfinite(v) && (!axis.log || v > 0.0);
}

Axis fit_axis(bool log, const PlotSpec& spec, bool for_x) {
  Axis axis;
  axis.log = log;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const Series& s : spec.series) {
    const auto& xs = for_x ? s.x : s.y;
    const auto& other = for_x ? s.y : s.x;
    const Axis probe{log, 1.0, 10.0};
    for (std::size_t i = 0; i < xs.size() && i < other.size(); ++i) {
      if (!usable(probe, xs[i]) || !std::isfinite(other[i])) continue;
      lo = std::min(lo, xs[i]);
      hi = std::max(hi, xs[i]);
    }
  }
  if (!(lo <= hi)) {  // no data
    axis.lo = log ? 1e-1 : 0.0;
    axis.hi = log ? 1e1 : 1.0;
    return axis;
  }
  if (log) {
    axis.lo = std::pow(10.0, std::floor(std::log10(lo)));
    axis.hi = std::pow(10.0, std::ceil(std::log10(hi)));
    if (axis.lo == axis.hi) axis.hi *= 10.0;
  } else {
    const double pad = (hi - lo) * 0.05;
    axis.lo = lo - pad;
    axis.hi = hi + pad;
    if (axis.lo == axis.hi) {
      axis.lo -= 0.5;
      axis.hi += 0.5;
    }
  }
  return axis;
}

std::vector<double> ticks_for(const Axis& axis) {
  std::vector<double> ticks;
  if (axis.log) {
    const int k0 = static_cast<int>(std::llround(std::log10(axis.lo)));
    const int k1 = static_cast<int>(std::llround(std::log10(axis.hi)));
    const int step = std::max(1, (k1 - k0) / 8);
    for (int k = k0; k <= k1; k += step) ticks.push_back(std::pow(10.0, k));
  } else {
    const double span = axis.hi - axis.lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    if (raw / mag > 5.0) step = 10.0 * mag;
    else if (raw / mag > 2.0) step = 5.0 * mag;
    else if (raw / mag > 1.0) step = 2.0 * mag;
    for (double t = std::ceil(axis.lo / step) * step; t <= axis.hi + step * 1e-9; t += step) {
      ticks.push_back(t);
    }
  }
  return ticks;
}

std::string marker_svg(Marker m, double cx, double cy, const std::string& color) {
  switch (m) {
    case Marker::circle:
      return "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) +
             "\" r=\"3.2\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.4\"/>\n";
    case Marker::square:
      return "<rect x=\"" + num(cx - 3) + "\" y=\"" + num(cy - 3) +
             "\" width=\"6\" height=\"6\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.4\"/>\n";
    case Marker::cross:
      return "<path d=\"M" + num(cx - 3) + " " + num(cy - 3) + "L" + num(cx + 3) + " " +
             num(cy + 3) + "M" + num(cx - 3) + " " + num(cy + 3) + "L" + num(cx + 3) + " " +
             num(cy - 3) + "\" stroke=\"" + color + "\" stroke-width=\"1.4\"/>\n";
    case Marker::none:
      break;
  }
  return {};
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  const Axis ax = fit_axis(spec.log_x, spec, true);
  const Axis ay = fit_axis(spec.log_y, spec, false);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double v) { return kLeft + ax.fraction(v) * plot_w; };
  const auto py = [&](double v) { return kTop + (1.0 - ay.fraction(v)) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) +
         "\">\n";
  svg += "<rect width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"26\" font-family=\"sans-serif\" font-size=\"16\""
         " text-anchor=\"middle\">" + escape(spec.title) + "</text>\n";

  // grid and tick labels
  for (double t : ticks_for(ax)) {
    const double x = px(t);
    svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(x) + "\" y2=\"" +
           num(kTop + plot_h) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" + sci(t) +
           "</text>\n";
  }
  for (double t : ticks_for(ay)) {
    const double y = py(t);
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft + plot_w) +
           "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" + sci(t) +
           "</text>\n";
  }

  // frame
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
         "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"#333333\"/>\n";
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 16) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
         escape(spec.x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + num(kTop + plot_h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         num(kTop + plot_h / 2) + ")\">" + escape(spec.y_label) + "</text>\n";

  // series
  for (std::size_t si = 0; si < spec.series.size(); ++si) {
    const Series& s = spec.series[si];
    const std::string color = s.color.empty() ? kPalette[si % 8] : s.color;
    std::string points;
    std::string markers;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!usable(ax, s.x[i]) || !usable(ay, s.y[i])) continue;
      const double cx = px(s.x[i]);
      const double cy = py(s.y[i]);
      points += num(cx) + "," + num(cy) + " ";
      markers += marker_svg(s.marker, cx, cy, color);
    }
    if (s.line && !points.empty()) {
      svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.6\"" +
             (s.dashed ? std::string(" stroke-dasharray=\"6 4\"") : std::string()) + "/>\n";
    }
    svg += markers;
  }

  // legend
  double ly = kTop + 12;
  for (std::size_t si = 0; si < spec.series.size(); ++si) {
    const Series& s = spec.series[si];
    const std::string color = s.color.empty() ? kPalette[si % 8] : s.color;
    const double lx = kLeft + plot_w - 220;
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 26) +
           "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"1.6\"" +
           (s.dashed ? std::string(" stroke-dasharray=\"6 4\"") : std::string()) + "/>\n";
    svg += marker_svg(s.marker, lx + 13, ly, color);
    svg += "<text x=\"" + num(lx + 32) + "\" y=\"" + num(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) + "</text>\n";
    ly += 18;
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace adyne::cli
