#include "fracdim/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace fracdim {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 700.0;
constexpr double kTop = 28.0;
constexpr double kBottom = 486.0;

const char* kColors[] = {"#1f77b4", "#d95f02", "#2ca02c", "#9467bd"};

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

double nice_step(double range) {
    if (!(range > 0.0)) return 1.0;
    double raw = range / 5.0;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double frac = raw / mag;
    double step;
    if (frac <= 1.5) step = 1.0;
    else if (frac <= 3.5) step = 2.0;
    else if (frac <= 7.5) step = 5.0;
    else step = 10.0;
    return step * mag;
}

}  // namespace

void write_scatter_svg(std::ostream& out, const std::vector<PlotSeries>& series,
                       const std::string& x_label, const std::string& y_label,
                       const std::string& title) {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const PlotSeries& s : series) {
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmin <= xmax)) {
        xmin = 0.0;
        xmax = 1.0;
        ymin = 0.0;
        ymax = 1.0;
    }
    if (xmax - xmin < 1e-12) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax - ymin < 1e-12) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    double xpad = 0.05 * (xmax - xmin);
    double ypad = 0.05 * (ymax - ymin);
    double x0 = xmin - xpad, x1 = xmax + xpad;
    double y0 = ymin - ypad, y1 = ymax + ypad;

    auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * (kRight - kLeft); };
    auto py = [&](double y) { return kBottom - (y - y0) / (y1 - y0) * (kBottom - kTop); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth, "%.0f")
        << "\" height=\"" << fmt(kHeight, "%.0f") << "\" viewBox=\"0 0 "
        << fmt(kWidth, "%.0f") << " " << fmt(kHeight, "%.0f") << "\">\n";
    out << "<rect width=\"" << fmt(kWidth, "%.0f") << "\" height=\"" << fmt(kHeight, "%.0f")
        << "\" fill=\"white\"/>\n";
    if (!title.empty()) {
        out << "<text x=\"" << fmt((kLeft + kRight) / 2) << "\" y=\"18\" font-family=\"sans-serif\""
            << " font-size=\"14\" text-anchor=\"middle\">" << title << "</text>\n";
    }

    // axes
    out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kBottom) << "\" x2=\"" << fmt(kRight)
        << "\" y2=\"" << fmt(kBottom) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft)
        << "\" y2=\"" << fmt(kBottom) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    double xstep = nice_step(x1 - x0);
    for (double t = std::ceil(x0 / xstep) * xstep; t <= x1 + 1e-12; t += xstep) {
        double gx = px(t);
        out << "<line x1=\"" << fmt(gx) << "\" y1=\"" << fmt(kBottom) << "\" x2=\"" << fmt(gx)
            << "\" y2=\"" << fmt(kBottom + 5) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(gx) << "\" y=\"" << fmt(kBottom + 20)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
            << fmt(t, "%.4g") << "</text>\n";
    }
    double ystep = nice_step(y1 - y0);
    for (double t = std::ceil(y0 / ystep) * ystep; t <= y1 + 1e-12; t += ystep) {
        double gy = py(t);
        out << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(gy) << "\" x2=\"" << fmt(kLeft)
            << "\" y2=\"" << fmt(gy) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(gy + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
            << fmt(t, "%.4g") << "</text>\n";
    }

    out << "<text x=\"" << fmt((kLeft + kRight) / 2) << "\" y=\"" << fmt(kHeight - 14)
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" << x_label
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << fmt((kTop + kBottom) / 2)
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 16 " << fmt((kTop + kBottom) / 2) << ")\">" << y_label
        << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const PlotSeries& s = series[si];
        const char* color = kColors[si % 4];
        if (s.with_line && !s.points.empty()) {
            double sxmin = s.points.front().first, sxmax = sxmin;
            for (auto [x, y] : s.points) {
                sxmin = std::min(sxmin, x);
                sxmax = std::max(sxmax, x);
            }
            double ya = s.intercept + s.slope * sxmin;
            double yb = s.intercept + s.slope * sxmax;
            out << "<line x1=\"" << fmt(px(sxmin)) << "\" y1=\"" << fmt(py(ya)) << "\" x2=\""
                << fmt(px(sxmax)) << "\" y2=\"" << fmt(py(yb)) << "\" stroke=\"" << color
                << "\" stroke-width=\"1.5\"/>\n";
        }
        for (auto [x, y] : s.points) {
            double cx = px(x);
            double cy = py(y);
            if (si % 2 == 0) {
                out << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
                    << "\" r=\"4\" fill=\"" << color << "\"/>\n";
            } else {
                out << "<path d=\"M " << fmt(cx) << " " << fmt(cy - 5) << " L " << fmt(cx + 4.5)
                    << " " << fmt(cy + 4) << " L " << fmt(cx - 4.5) << " " << fmt(cy + 4)
                    << " Z\" fill=\"" << color << "\"/>\n";
            }
        }
    }

    // legend, top-left corner of the plot area
    double ly = kTop + 16;
    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kColors[si % 4];
        double lx = kLeft + 14;
        if (si % 2 == 0) {
            out << "<circle cx=\"" << fmt(lx) << "\" cy=\"" << fmt(ly - 4) << "\" r=\"4\" fill=\""
                << color << "\"/>\n";
        } else {
            out << "<path d=\"M " << fmt(lx) << " " << fmt(ly - 9) << " L " << fmt(lx + 4.5)
                << " " << fmt(ly) << " L " << fmt(lx - 4.5) << " " << fmt(ly)
                << " Z\" fill=\"" << color << "\"/>\n";
        }
        out << "<text x=\"" << fmt(lx + 10) << "\" y=\"" << fmt(ly)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[si].label
            << "</text>\n";
        ly += 18;
    }

    out << "</svg>\n";
}

}  // namespace fracdim
