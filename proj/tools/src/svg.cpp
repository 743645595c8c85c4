#include "savi_cli/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "savi/core.hpp"

namespace savi::cli {

namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string fixed(double v, int digits = 2) {
  if (v == 0.0) v = 0.0;  // no "-0.00"
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, digits);
  if (ec != std::errc()) return "0";
  return std::string(buf.data(), ptr);
}

std::string tick_label(double v) {
  std::array<char, 64> buf{};
  if (std::abs(v) < 1e-12) v = 0.0;
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 6);
  if (ec != std::errc()) return "?";
  return std::string(buf.data(), ptr);
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

// Step of roughly `target` ticks over [lo, hi], rounded to 1, 2 or 5 x 10^k.
double nice_step(double lo, double hi, int target) {
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  const double nice = r < 1.5 ? 1.0 : (r < 3.0 ? 2.0 : (r < 7.0 ? 5.0 : 10.0));
  return nice * mag;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (hi - lo <= 0.0) {
      const double w = std::max(1.0, std::abs(lo) * 0.1);
      lo -= w;
      hi += w;
    }
  }
};

}  // namespace

std::string render_svg(const LineChart& chart) {
  Range xr;
  Range yr;
  std::size_t points = 0;
  for (const Series& s : chart.series) {
    if (s.x.size() != s.y.size()) throw ConfigError("plot: series '" + s.name + "' is ragged");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
        xr.add(s.x[i]);
        yr.add(s.y[i]);
        ++points;
      }
    }
  }
  if (points == 0) throw ConfigError("plot: no finite points to draw");
  if (chart.threshold) yr.add(chart.threshold->y);
  xr.pad();
  yr.pad();

  const double left = 70.0;
  const double right = 170.0;
  const double top = 40.0;
  const double bottom = 55.0;
  const double pw = chart.width - left - right;
  const double ph = chart.height - top - bottom;
  auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(chart.width) +
         "\" height=\"" + std::to_string(chart.height) + "\" viewBox=\"0 0 " +
         std::to_string(chart.width) + " " + std::to_string(chart.height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">\n";
  if (!chart.title.empty()) {
    svg += "<text x=\"" + fixed(left + pw / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
           escape(chart.title) + "</text>\n";
  }

  // Axes and ticks.
  svg += "<rect x=\"" + fixed(left) + "\" y=\"" + fixed(top) + "\" width=\"" + fixed(pw) +
         "\" height=\"" + fixed(ph) + "\" fill=\"none\" stroke=\"#444444\"/>\n";
  const double xstep = nice_step(xr.lo, xr.hi, 6);
  for (double v = std::ceil(xr.lo / xstep) * xstep; v <= xr.hi + 1e-9 * xstep; v += xstep) {
    const std::string px = fixed(sx(v));
    svg += "<line x1=\"" + px + "\" y1=\"" + fixed(top + ph) + "\" x2=\"" + px + "\" y2=\"" +
           fixed(top + ph + 5) + "\" stroke=\"#444444\"/>\n";
    svg += "<text x=\"" + px + "\" y=\"" + fixed(top + ph + 18) + "\" text-anchor=\"middle\">" +
           tick_label(v) + "</text>\n";
  }
  const double ystep = nice_step(yr.lo, yr.hi, 6);
  for (double v = std::ceil(yr.lo / ystep) * ystep; v <= yr.hi + 1e-9 * ystep; v += ystep) {
    const std::string py = fixed(sy(v));
    svg += "<line x1=\"" + fixed(left - 5) + "\" y1=\"" + py + "\" x2=\"" + fixed(left + pw) +
           "\" y2=\"" + py + "\" stroke=\"#e0e0e0\"/>\n";
    svg += "<text x=\"" + fixed(left - 8) + "\" y=\"" + fixed(sy(v) + 4) + "\" text-anchor=\"end\">" +
           tick_label(v) + "</text>\n";
  }
  if (!chart.x_label.empty()) {
    svg += "<text x=\"" + fixed(left + pw / 2) + "\" y=\"" + fixed(chart.height - 12.0) +
           "\" text-anchor=\"middle\">" + escape(chart.x_label) + "</text>\n";
  }
  if (!chart.y_label.empty()) {
    svg += "<text x=\"16\" y=\"" + fixed(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           fixed(top + ph / 2) + ")\">" + escape(chart.y_label) + "</text>\n";
  }

  if (chart.threshold) {
    const std::string py = fixed(sy(chart.threshold->y));
    svg += "<line x1=\"" + fixed(left) + "\" y1=\"" + py + "\" x2=\"" + fixed(left + pw) + "\" y2=\"" +
           py + "\" stroke=\"#000000\" stroke-dasharray=\"6 4\"/>\n";
    if (!chart.threshold->label.empty()) {
      svg += "<text x=\"" + fixed(left + pw + 6) + "\" y=\"" + fixed(sy(chart.threshold->y) + 4) + "\">" +
             escape(chart.threshold->label) + "</text>\n";
    }
  }

  for (std::size_t k = 0; k < chart.series.size(); ++k) {
    const Series& s = chart.series[k];
    const char* color = kPalette[k % kPalette.size()];
    std::string pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!pts.empty()) pts += ' ';
      pts += fixed(sx(s.x[i])) + "," + fixed(sy(s.y[i]));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    const double ly = top + 14.0 + 18.0 * static_cast<double>(k);
    svg += "<line x1=\"" + fixed(left + pw + 10) + "\" y1=\"" + fixed(ly) + "\" x2=\"" +
           fixed(left + pw + 34) + "\" y2=\"" + fixed(ly) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fixed(left + pw + 40) + "\" y=\"" + fixed(ly + 4) + "\">" + escape(s.name) +
           "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace savi::cli
