#include "plaquette/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "plaquette/cli/settings.hpp"

namespace plaquette::cli {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                               "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// two decimals is plenty for pixel coordinates and keeps files small
std::string px(double v) {
  const double r = std::round(v * 100.0) / 100.0;
  return format_number(r);
}

}  // namespace

std::string render_svg(const PlotData& plot) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& s : plot.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double x = plot.log_x ? std::log10(s.x[i]) : s.x[i];
      if (!std::isfinite(x) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (xmax == xmin) xmin -= 0.5, xmax += 0.5;
  if (ymax == ymin) ymin -= 0.5, ymax += 0.5;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(kWidth) << "\" height=\"" << px(kHeight)
    << "\" viewBox=\"0 0 " << px(kWidth) << ' ' << px(kHeight) << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << px(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
    << "font-size=\"16\">" << escape(plot.title) << "</text>\n";
  o << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\"" << px(pw) << "\" height=\"" << px(ph)
    << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    const double label_x = plot.log_x ? std::pow(10.0, fx) : fx;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", label_x);
    o << "<text x=\"" << px(sx(fx)) << "\" y=\"" << px(kTop + ph + 18) << "\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"11\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof buf, "%.3g", fy);
    o << "<text x=\"" << px(kLeft - 6) << "\" y=\"" << px(sy(fy) + 4) << "\" text-anchor=\"end\" "
      << "font-family=\"sans-serif\" font-size=\"11\">" << buf << "</text>\n";
  }
  o << "<text x=\"" << px(kLeft + pw / 2) << "\" y=\"" << px(kHeight - 16) << "\" text-anchor=\"middle\" "
    << "font-family=\"sans-serif\" font-size=\"13\">" << escape(plot.x_label) << (plot.log_x ? " (log)" : "")
    << "</text>\n";
  o << "<text x=\"18\" y=\"" << px(kTop + ph / 2) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
    << "font-size=\"13\" transform=\"rotate(-90 18 " << px(kTop + ph / 2) << ")\">" << escape(plot.y_label)
    << "</text>\n";

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    const char* colour = kPalette[k % kPalette.size()];
    o << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double x = plot.log_x ? std::log10(s.x[i]) : s.x[i];
      if (!std::isfinite(x) || !std::isfinite(s.y[i])) continue;
      if (!first) o << ' ';
      o << px(sx(x)) << ',' << px(sy(s.y[i]));
      first = false;
    }
    o << "\"/>\n";
    const double ly = kTop + 14.0 + 16.0 * static_cast<double>(k);
    o << "<line x1=\"" << px(kLeft + pw + 10) << "\" y1=\"" << px(ly - 4) << "\" x2=\"" << px(kLeft + pw + 30)
      << "\" y2=\"" << px(ly - 4) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << px(kLeft + pw + 34) << "\" y=\"" << px(ly) << "\" font-family=\"sans-serif\" "
      << "font-size=\"11\">" << escape(s.label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace plaquette::cli
