#pragma once

#include <optional>
#include <string>
#include <vector>

namespace savi::cli {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct HorizontalLine {
  double y = 0.0;
  std::string label;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::optional<HorizontalLine> threshold;  // drawn dashed
  int width = 720;
  int height = 440;
};

// Standalone SVG document (inline styles, no external references).
// Non-finite points are skipped. ConfigError when there is nothing to draw.
[[nodiscard]] std::string render_svg(const LineChart& chart);

}  // namespace savi::cli
