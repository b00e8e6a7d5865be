#pragma once

#include <string>
#include <utility>
#include <vector>

namespace minnorm {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;  // decade ticks; requires positive x values
};

/// Self-contained SVG line chart (axes, ticks, polylines, legend).
/// Throws std::invalid_argument when no series has data or when log
/// scaling meets a nonpositive x.
std::string render_line_chart(const PlotSpec& spec, const std::vector<PlotSeries>& series);

}  // namespace minnorm
