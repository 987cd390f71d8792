#include "degen/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace degen::plot {

namespace {

constexpr double kPanelWidth = 360.0;
constexpr double kPanelHeight = 300.0;
constexpr double kMarginLeft = 48.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 28.0;
constexpr double kMarginBottom = 36.0;

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad(double fraction) {
        double span = hi - lo;
        if (span == 0.0) {
            span = std::max(1.0, std::fabs(lo));
        }
        lo -= fraction * span;
        hi += fraction * span;
    }
};

std::string fmt(const char* format, auto... args) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
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

}  // namespace

std::string render_svg(std::span<const Panel> panels) {
    if (panels.empty()) {
        throw std::invalid_argument("plot needs at least one dataset");
    }

    Range xr;
    Range yr;
    std::vector<RegressionFit> fits;
    for (const Panel& p : panels) {
        for (double x : p.data.xs()) xr.include(x);
        for (double y : p.data.ys()) yr.include(y);
        fits.push_back(stats::linregress(p.data));
    }
    // Line endpoints also have to fit in the frame.
    for (const RegressionFit& f : fits) {
        yr.include(f.beta0 + f.beta1 * xr.lo);
        yr.include(f.beta0 + f.beta1 * xr.hi);
    }
    const double line_lo = xr.lo;
    const double line_hi = xr.hi;
    xr.pad(0.05);
    yr.pad(0.05);

    const auto count = panels.size();
    const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count))));
    const auto rows = (count + cols - 1) / cols;
    const double width = kPanelWidth * static_cast<double>(cols);
    const double height = kPanelHeight * static_cast<double>(rows);
    const double plot_w = kPanelWidth - kMarginLeft - kMarginRight;
    const double plot_h = kPanelHeight - kMarginTop - kMarginBottom;

    const auto sx = [&](double x) { return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    const auto sy = [&](double y) {
        return kMarginTop + (1.0 - (y - yr.lo) / (yr.hi - yr.lo)) * plot_h;
    };

    std::string svg;
    svg += fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
               "viewBox=\"0 0 %.0f %.0f\" font-family=\"sans-serif\" font-size=\"11\">\n",
               width, height, width, height);
    svg += fmt("<rect width=\"%.0f\" height=\"%.0f\" fill=\"white\"/>\n", width, height);

    for (std::size_t i = 0; i < count; ++i) {
        const Panel& p = panels[i];
        const RegressionFit& f = fits[i];
        const double ox = kPanelWidth * static_cast<double>(i % cols);
        const double oy = kPanelHeight * static_cast<double>(i / cols);

        svg += fmt("<g class=\"panel\" transform=\"translate(%.0f,%.0f)\">\n", ox, oy);
        svg += "<text x=\"" + fmt("%.1f", kMarginLeft + plot_w / 2) + "\" y=\"18\" " +
               "text-anchor=\"middle\" font-size=\"13\">" + escape(p.title) + "</text>\n";
        svg += fmt("<rect class=\"frame\" x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                   "fill=\"none\" stroke=\"black\"/>\n",
                   kMarginLeft, kMarginTop, plot_w, plot_h);
        svg += fmt("<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"start\">%.4g</text>\n", kMarginLeft,
                   kMarginTop + plot_h + 14, xr.lo);
        svg += fmt("<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%.4g</text>\n",
                   kMarginLeft + plot_w, kMarginTop + plot_h + 14, xr.hi);
        svg += fmt("<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%.4g</text>\n",
                   kMarginLeft - 4, kMarginTop + plot_h, yr.lo);
        svg += fmt("<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%.4g</text>\n",
                   kMarginLeft - 4, kMarginTop + 10, yr.hi);

        const double y1 = f.beta0 + f.beta1 * line_lo;
        const double y2 = f.beta0 + f.beta1 * line_hi;
        svg += fmt("<line class=\"regression\" x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" "
                   "data-x1=\"%.12g\" data-y1=\"%.12g\" data-x2=\"%.12g\" data-y2=\"%.12g\" "
                   "stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n",
                   sx(line_lo), sy(y1), sx(line_hi), sy(y2), line_lo, y1, line_hi, y2);

        for (std::size_t k = 0; k < p.data.size(); ++k) {
            svg += fmt("<circle class=\"point\" cx=\"%.3f\" cy=\"%.3f\" r=\"3.5\" "
                       "fill=\"#2c6fbb\" fill-opacity=\"0.8\"/>\n",
                       sx(p.data.xs()[k]), sy(p.data.ys()[k]));
        }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace degen::plot
