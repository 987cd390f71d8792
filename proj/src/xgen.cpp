#include "degen/xgen.hpp"

#include "degen/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace degen::xgen {

namespace {

void check_variance(double variance) {
    if (!(variance > 0.0) || !std::isfinite(variance)) {
        throw std::invalid_argument("x variance must be positive and finite");
    }
}

}  // namespace

double uniform_spacing(std::size_t n, double variance) {
    const double nd = static_cast<double>(n);
    return std::sqrt(12.0 * variance / (nd * (nd + 1.0)));
}

std::vector<double> uniform_x(const XGridSpec& spec) {
    if (spec.n < 3) {
        throw std::invalid_argument("uniform grid needs n >= 3");
    }
    check_variance(spec.variance);

    const double a = uniform_spacing(spec.n, spec.variance);
    const double half = 0.5 * static_cast<double>(spec.n + 1);
    std::vector<double> xs(spec.n);
    // Written as mean + a (k - half) rather than x0 + a k so the centre point
    // of an odd grid lands exactly on the mean.
    for (std::size_t k = 1; k <= spec.n; ++k) {
        xs[k - 1] = spec.mean + a * (static_cast<double>(k) - half);
    }
    return xs;
}

std::vector<double> bimodal_x(const XGridSpec& spec) {
    if (spec.n < 3) {
        throw std::invalid_argument("bimodal grid needs n >= 3");
    }
    check_variance(spec.variance);

    const double nd = static_cast<double>(spec.n);
    const double sign = spec.family == XFamily::BimodalMinus ? -1.0 : 1.0;
    const double dxb = sign * (nd - 1.0) * std::sqrt(spec.variance / nd);
    const double dxa = -dxb / (nd - 1.0);

    std::vector<double> xs(spec.n, spec.mean + dxa);
    xs.back() = spec.mean + dxb;
    return xs;
}

std::vector<double> make_x(const XGridSpec& spec) {
    return spec.family == XFamily::Uniform ? uniform_x(spec) : bimodal_x(spec);
}

std::vector<double> custom_x(std::span<const double> values) {
    if (values.size() < 3) {
        throw std::invalid_argument("custom x grid needs at least 3 values");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("custom x grid contains a non-finite value");
        }
    }
    if (stats::variance(values) == 0.0) {
        throw std::invalid_argument("all x identical; no regression possible");
    }
    std::vector<double> xs(values.begin(), values.end());
    std::sort(xs.begin(), xs.end());
    return xs;
}

}  // namespace degen::xgen
