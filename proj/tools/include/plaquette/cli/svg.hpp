#pragma once

#include <string>
#include <vector>

namespace plaquette::cli {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotData {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  std::vector<PlotSeries> series;
};

/// Static SVG line plot. Output depends only on the plot.
std::string render_svg(const PlotData& plot);

}  // namespace plaquette::cli
