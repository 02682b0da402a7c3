#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fracdim {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
    double slope = 0.0;      // regression line drawn across the series x-range
    double intercept = 0.0;
    bool with_line = true;
};

/// Self-contained deterministic SVG scatter plot: markers per series, one
/// least-squares line each, axes with ticks, and a legend. No timestamps,
/// fixed number formatting.
void write_scatter_svg(std::ostream& out, const std::vector<PlotSeries>& series,
                       const std::string& x_label, const std::string& y_label,
                       const std::string& title = "");

}  // namespace fracdim
