#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace degen {

enum class XFamily { Uniform, BimodalPlus, BimodalMinus };

/// Target x-statistics and which grid family realises them.
struct XGridSpec {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 1.0;
    XFamily family = XFamily::Uniform;
};

namespace xgen {

/**
 * Arithmetic grid x_k = x0 + a k, k = 1..n, with
 * a = sigma sqrt(12 / (n (n + 1))) and x0 = mean - a (n + 1) / 2.
 *
 * For odd n this is a = sigma sqrt(6 / (n m)), m = (n + 1) / 2.
 */
[[nodiscard]] std::vector<double> uniform_x(const XGridSpec& spec);

/// Grid spacing a used by uniform_x.
[[nodiscard]] double uniform_spacing(std::size_t n, double variance);

/**
 * n - 1 copies of x_a followed by one x_b.
 *
 * dx_b = ±(n - 1) sigma / sqrt(n) and dx_a = -dx_b / (n - 1); BimodalPlus puts
 * the lone value above the mean. For n = 11, mean 9, variance 11 that is
 * (8, 19); BimodalMinus gives (10, -1).
 */
[[nodiscard]] std::vector<double> bimodal_x(const XGridSpec& spec);

/// Dispatches on spec.family.
[[nodiscard]] std::vector<double> make_x(const XGridSpec& spec);

/// Validated, ascending copy of a user-supplied grid.
[[nodiscard]] std::vector<double> custom_x(std::span<const double> values);

}  // namespace xgen
}  // namespace degen
