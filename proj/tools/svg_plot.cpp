#include "svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace ccc_tool {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 360.0;
constexpr double kMargin = 48.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  int first = 0;
  int last = 1;
  double y_min = -2.0;
  double y_max = 2.0;

  double x(int position) const {
    return kMargin + (kWidth - 2 * kMargin) * (position - first) / std::max(1, last - first);
  }
  double y(double value) const {
    return kHeight - kMargin - (kHeight - 2 * kMargin) * (value - y_min) / (y_max - y_min);
  }
};

std::string polyline(const Frame& f, const std::vector<PlotPoint>& pts, const char* style) {
  if (pts.empty()) return {};
  std::string out = "<polyline fill=\"none\" " + std::string(style) + " points=\"";
  for (const PlotPoint& p : pts) out += num(f.x(p.position)) + "," + num(f.y(p.value)) + " ";
  out.back() = '"';
  out += "/>\n";
  return out;
}

}  // namespace

std::string render_svg(const SeriesPlot& plot) {
  Frame f;
  f.y_min = plot.y_min;
  f.y_max = plot.y_max;
  int lo = 1 << 30;
  int hi = -(1 << 30);
  for (const auto* pts : {&plot.actual, &plot.recalled, &plot.predicted}) {
    for (const PlotPoint& p : *pts) {
      lo = std::min(lo, p.position);
      hi = std::max(hi, p.position);
    }
  }
  if (lo <= hi) {
    f.first = lo;
    f.last = hi;
  }

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
                    "\" height=\"" + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
         plot.title + "</text>\n";

  // axes and ticks
  svg += "<g stroke=\"#888\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(kHeight - kMargin) + "\" x2=\"" +
         num(kWidth - kMargin) + "\" y2=\"" + num(kHeight - kMargin) + "\"/>\n";
  svg += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(kMargin) + "\" x2=\"" + num(kMargin) +
         "\" y2=\"" + num(kHeight - kMargin) + "\"/>\n";
  svg += "</g>\n";
  for (int p = f.first; p <= f.last; ++p) {
    if (p % 5 != 0) continue;
    svg += "<text x=\"" + num(f.x(p)) + "\" y=\"" + num(kHeight - kMargin + 16) +
           "\" text-anchor=\"middle\">" + std::to_string(p) + "</text>\n";
  }
  for (double v = f.y_min; v <= f.y_max + 1e-9; v += 1.0) {
    svg += "<text x=\"" + num(kMargin - 6) + "\" y=\"" + num(f.y(v) + 4) +
           "\" text-anchor=\"end\">" + num(v) + "</text>\n";
  }

  std::vector<PlotPoint> lighter = plot.recalled;
  lighter.insert(lighter.end(), plot.predicted.begin(), plot.predicted.end());
  svg += polyline(f, lighter, "stroke=\"#9ab\" stroke-width=\"1.5\"");
  svg += polyline(f, plot.actual, "stroke=\"black\" stroke-width=\"1.5\"");

  int first_predicted = plot.predicted.empty() ? f.last + 1 : plot.predicted.front().position;
  for (const PlotPoint& p : plot.actual) {
    if (p.position < first_predicted) continue;
    svg += "<circle cx=\"" + num(f.x(p.position)) + "\" cy=\"" + num(f.y(p.value)) +
           "\" r=\"3.5\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (const PlotPoint& p : plot.predicted) {
    const double cx = f.x(p.position);
    const double cy = f.y(p.value);
    svg += "<path d=\"M" + num(cx - 3.5) + " " + num(cy - 3.5) + " L" + num(cx + 3.5) + " " +
           num(cy + 3.5) + " M" + num(cx - 3.5) + " " + num(cy + 3.5) + " L" + num(cx + 3.5) +
           " " + num(cy - 3.5) + "\" stroke=\"#357\" stroke-width=\"1.5\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace ccc_tool
