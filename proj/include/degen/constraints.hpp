#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degen {

/// Raised when the requested statistics cannot be met by the chosen
/// construction. stage() names the pipeline step that failed.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(std::string stage, const std::string& message)
        : std::runtime_error(message), stage_(std::move(stage)) {}

    [[nodiscard]] const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

/// Non-fatal diagnostics collected along the generation pipeline.
using Warnings = std::vector<std::string>;

/**
 * The six target statistics of a dataset: N, mean and sample variance of x,
 * mean and sample variance of y, and the regression slope.
 *
 * Construction rejects var_y < beta1^2 var_x, which would require R^2 > 1.
 */
class ConstraintSet {
public:
    ConstraintSet(std::size_t n, double mean_x, double var_x, double mean_y, double var_y,
                  double beta1);

    /// N = 11, x̄ = 9, σx² = 11, ȳ = 7.5, σy² = 4.125, β1 = 0.5.
    [[nodiscard]] static ConstraintSet anscombe();

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] double mean_x() const noexcept { return mean_x_; }
    [[nodiscard]] double var_x() const noexcept { return var_x_; }
    [[nodiscard]] double mean_y() const noexcept { return mean_y_; }
    [[nodiscard]] double var_y() const noexcept { return var_y_; }
    [[nodiscard]] double beta1() const noexcept { return beta1_; }
    [[nodiscard]] double beta0() const noexcept { return mean_y_ - beta1_ * mean_x_; }

    /// beta1^2 var_x / var_y
    [[nodiscard]] double r_squared() const noexcept { return beta1_ * beta1_ * var_x_ / var_y_; }

    /// Regression line Y(x) = beta0 + beta1 x.
    [[nodiscard]] double line(double x) const noexcept { return beta0() + beta1_ * x; }

    [[nodiscard]] double sxx() const noexcept { return static_cast<double>(n_ - 1) * var_x_; }
    [[nodiscard]] double syy() const noexcept { return static_cast<double>(n_ - 1) * var_y_; }

    /// Same statistics with a different sample size.
    [[nodiscard]] ConstraintSet with_n(std::size_t n) const;

    friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;

private:
    std::size_t n_;
    double mean_x_;
    double var_x_;
    double mean_y_;
    double var_y_;
    double beta1_;
};

}  // namespace degen
