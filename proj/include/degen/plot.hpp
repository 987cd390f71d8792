#pragma once

#include "degen/stats.hpp"

#include <span>
#include <string>

namespace degen::plot {

struct Panel {
    std::string title;
    DatasetPair data;
};

/**
 * SVG figure with one scatter panel per dataset, laid out on a near-square
 * grid with shared axis ranges. Each panel overlays its least-squares line
 * across the shared x-range.
 *
 * Elements carry classes for inspection: g.panel, circle.point and
 * line.regression (whose data-x1/y1/x2/y2 attributes hold the endpoints in
 * data coordinates). Output depends only on the input.
 */
[[nodiscard]] std::string render_svg(std::span<const Panel> panels);

}  // namespace degen::plot
