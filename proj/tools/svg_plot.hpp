#pragma once

#include <string>
#include <vector>

namespace ccc_tool {

struct PlotPoint {
  int position;
  double value;
};

/// Actual series (solid, 'o' markers on the predicted span), network recall
/// on training positions (lighter line) and predictions (lighter line with
/// 'x' markers).
struct SeriesPlot {
  std::string title;
  std::vector<PlotPoint> actual;
  std::vector<PlotPoint> recalled;
  std::vector<PlotPoint> predicted;
  double y_min = -2.0;
  double y_max = 2.0;
};

std::string render_svg(const SeriesPlot& plot);

}  // namespace ccc_tool
