#include "minnorm/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace minnorm {

namespace {

constexpr double kWidth = 680;
constexpr double kHeight = 440;
constexpr double kMarginLeft = 80;
constexpr double kMarginRight = 30;
constexpr double kMarginTop = 50;
constexpr double kMarginBottom = 65;

const char* kColors[] = {"#1f6fb2", "#c23b22", "#2e8b57", "#8a2be2", "#b8860b", "#555555"};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

/// Round tick step to 1/2/5 times a power of ten.
double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(1, target_ticks);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (raw <= m * mag) return m * mag;
  return 10.0 * mag;
}

}  // namespace

std::string render_line_chart(const PlotSpec& spec, const std::vector<PlotSeries>& series) {
  std::size_t total_points = 0;
  for (const PlotSeries& s : series) total_points += s.points.size();
  if (total_points == 0) throw std::invalid_argument("nothing to plot");

  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  for (const PlotSeries& s : series) {
    for (auto [x, y] : s.points) {
      if (spec.log_x) {
        if (x <= 0.0) throw std::invalid_argument("log axis requires positive x values");
        x = std::log10(x);
      }
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_max == x_min) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  if (y_max == y_min) {
    y_min -= std::max(0.5, std::abs(y_min) * 0.1);
    y_max += std::max(0.5, std::abs(y_max) * 0.1);
  }
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double x) {
    if (spec.log_x) x = std::log10(x);
    return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w;
  };
  auto sy = [&](double y) {
    return kMarginTop + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
         "font-family=\"sans-serif\">"
      << spec.title << "</text>\n";

  // Axes.
  svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
      << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
      << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // X ticks: decades for log scale, nice steps otherwise.
  if (spec.log_x) {
    for (int d = static_cast<int>(std::ceil(x_min)); d <= static_cast<int>(std::floor(x_max));
         ++d) {
      const double px = kMarginLeft + (d - x_min) / (x_max - x_min) * plot_w;
      svg << "<line x1=\"" << px << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << px
          << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
      svg << "<text x=\"" << px << "\" y=\"" << kMarginTop + plot_h + 20
          << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">1e" << d
          << "</text>\n";
    }
  } else {
    const double step = nice_step(x_max - x_min, 6);
    for (double t = std::ceil(x_min / step) * step; t <= x_max + 1e-12; t += step) {
      const double px = kMarginLeft + (t - x_min) / (x_max - x_min) * plot_w;
      svg << "<line x1=\"" << px << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << px
          << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
      svg << "<text x=\"" << px << "\" y=\"" << kMarginTop + plot_h + 20
          << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(t)
          << "</text>\n";
    }
  }
  {
    const double step = nice_step(y_max - y_min, 6);
    for (double t = std::ceil(y_min / step) * step; t <= y_max + 1e-12; t += step) {
      const double py = sy(t);
      svg << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << py << "\" x2=\"" << kMarginLeft
          << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
      svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << py << "\" x2=\"" << kMarginLeft + plot_w
          << "\" y2=\"" << py << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
      svg << "<text x=\"" << kMarginLeft - 9 << "\" y=\"" << py + 4
          << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(t)
          << "</text>\n";
    }
  }

  svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 18
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << spec.x_label
      << "</text>\n";
  svg << "<text x=\"20\" y=\"" << kMarginTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" transform=\"rotate(-90 20 "
      << kMarginTop + plot_h / 2 << ")\">" << spec.y_label << "</text>\n";

  int color = 0;
  double legend_y = kMarginTop + 8;
  for (const PlotSeries& s : series) {
    if (s.points.empty()) continue;
    auto sorted = s.points;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream path;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      path << (i == 0 ? 'M' : 'L') << sx(sorted[i].first) << ' ' << sy(sorted[i].second) << ' ';
    const char* c = kColors[color % (sizeof(kColors) / sizeof(kColors[0]))];
    svg << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << c
        << "\" stroke-width=\"1.8\"/>\n";
    for (auto [x, y] : sorted)
      svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"2.6\" fill=\"" << c
          << "\"/>\n";
    if (!s.label.empty()) {
      svg << "<rect x=\"" << kMarginLeft + plot_w - 150 << "\" y=\"" << legend_y - 8
          << "\" width=\"12\" height=\"3\" fill=\"" << c << "\"/>\n";
      svg << "<text x=\"" << kMarginLeft + plot_w - 132 << "\" y=\"" << legend_y
          << "\" font-size=\"11\" font-family=\"sans-serif\">" << s.label << "</text>\n";
      legend_y += 16;
    }
    ++color;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace minnorm
