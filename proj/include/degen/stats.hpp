#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace degen {

/// Paired observations (x_k, y_k). Lengths are equal, at least 3, and every
/// value is finite; the constructor and set_y() enforce this.
class DatasetPair {
public:
    DatasetPair(std::vector<double> xs, std::vector<double> ys);

    [[nodiscard]] std::span<const double> xs() const noexcept { return xs_; }
    [[nodiscard]] std::span<const double> ys() const noexcept { return ys_; }
    [[nodiscard]] std::size_t size() const noexcept { return xs_.size(); }

    void set_y(std::size_t index, double value);

    friend bool operator==(const DatasetPair&, const DatasetPair&) = default;

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

struct RegressionFit {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double r_squared = 0.0;
};

/// Third and fourth moments of the z-scores of x and y.
struct MomentReport {
    double skew_x = 0.0;
    double kurt_x = 0.0;
    double skew_y = 0.0;
    double kurt_y = 0.0;
};

namespace stats {

/// Neumaier-compensated sum.
[[nodiscard]] double sum(std::span<const double> values);

/// @throws std::invalid_argument("empty vector") for empty input
[[nodiscard]] double mean(std::span<const double> values);

/// Sum of squared deviations from the mean (S_xx).
[[nodiscard]] double sum_squared_deviations(std::span<const double> values);

/// Sum of cross deviation products (S_xy).
[[nodiscard]] double sum_cross_deviations(std::span<const double> x, std::span<const double> y);

/**
 * Sample variance S_xx / (N - 1).
 *
 * The N - 1 divisor is the one that gives var(x) = 11 for the Anscombe grid
 * x = 4..14 (S_xx = 110).
 *
 * @throws std::invalid_argument("degenerate sample") when fewer than 2 values
 */
[[nodiscard]] double variance(std::span<const double> values);

/// Sample covariance S_xy / (N - 1). Throws on length mismatch or N < 2.
[[nodiscard]] double covariance(std::span<const double> x, std::span<const double> y);

/**
 * Ordinary least squares fit y = beta0 + beta1 x.
 *
 * r_squared is beta1^2 S_xx / S_yy, and 1 when S_yy == 0 (every point lies
 * on the horizontal fitted line).
 *
 * @throws std::invalid_argument when var(x) == 0
 */
[[nodiscard]] RegressionFit linregress(const DatasetPair& data);

/// Mean of z^order with z = (v - mean) / s, s the sample (N - 1) standard
/// deviation. order must be 3 or 4.
[[nodiscard]] double zscore_moment(std::span<const double> values, int order);

}  // namespace stats
}  // namespace degen
