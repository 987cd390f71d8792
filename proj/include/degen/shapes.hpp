#pragma once

#include "degen/constraints.hpp"
#include "degen/stats.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace degen {

enum class QuadraticBranch { Left, Right };

/// Scatter about the regression line with Normal(0, noise_sd^2) offsets.
struct LinearNoise {
    double noise_sd = 0.0;
    std::uint64_t seed = 0;
};

/// Parabola q0 + alpha (x - x*)^2 whose parameters absorb the y-constraints.
/// The branch picks the extremum left or right of the x mean.
struct Quadratic {
    QuadraticBranch branch = QuadraticBranch::Right;
};

/// Points on a second line b0' + b1' x with one point moved to outlier_y.
struct LinearOutlier {
    double beta0p = 0.0;
    double beta1p = 0.0;
    std::size_t outlier_index = 0;  // 0-based
    double outlier_y = 0.0;
};

/// For two-valued x grids: the grouped points scatter about Y(x_a), the lone
/// point sits exactly on the line.
struct BimodalNoise {
    double noise_sd = 0.0;
    std::uint64_t seed = 0;
};

/// Y(x) + f0 (x - h1)(x - h2)(x - h3)(x - h4), optionally jittered vertically.
struct Quartic {
    double f0 = 0.0;
    std::array<double, 4> roots{};
    double jitter_sd = 0.0;
    std::uint64_t seed = 0;
};

/// Every point exactly on the regression line.
struct OnLine {};

using ShapeSpec = std::variant<LinearNoise, Quadratic, LinearOutlier, BimodalNoise, Quartic, OnLine>;

struct QuadraticParams {
    double alpha = 0.0;
    double q0 = 0.0;
    double xstar = 0.0;
};

namespace shapes {

[[nodiscard]] double eval_line(const ConstraintSet& constraints, double x);

[[nodiscard]] std::vector<double> linear_noise(std::span<const double> xs,
                                               const ConstraintSet& constraints, double noise_sd,
                                               std::uint64_t seed);

// Quadratic family.
//
// For a trial extremum position x*, the mean constraint fixes q0 and the
// covariance constraint fixes alpha:
//
//   alpha = beta1 S_xx / sum_k (x_k - x̄)(x_k - x*)^2
//   q0    = ȳ - (alpha / N) sum_k (x_k - x*)^2
//
// leaving the variance gap Δσ²(x*) = var(q0 + alpha (x - x*)^2) - σy² as a
// one-dimensional root problem. When beta1 == 0 the covariance constraint
// instead pins x* where the denominator vanishes and alpha comes from the
// variance constraint.

/// alpha, q0 at a given x* (beta1 != 0).
[[nodiscard]] QuadraticParams quadratic_params_at(std::span<const double> xs,
                                                  const ConstraintSet& constraints, double xstar);

/// Alternative alpha with denominator sum_k (x_k - x*)^3. It does not satisfy
/// the covariance constraint for a grid that is not centred on x*; kept for
/// comparison in tests.
[[nodiscard]] double alpha_cubic_denominator(std::span<const double> xs,
                                             const ConstraintSet& constraints, double xstar);

/// Δσ²(x*) for the parameters of quadratic_params_at.
[[nodiscard]] double quadratic_variance_gap(std::span<const double> xs,
                                            const ConstraintSet& constraints, double xstar);

/// All roots of Δσ² found by scanning [min - 2 range, max + 2 range] at 200
/// points and refining each sign change. Ascending.
[[nodiscard]] std::vector<double> quadratic_roots(std::span<const double> xs,
                                                  const ConstraintSet& constraints);

/**
 * Parabola parameters meeting ȳ, σy² and β1 on the given grid. Left/Right
 * selects the root nearest the x mean on that side.
 *
 * @throws InfeasibleError("no quadratic shape exists for these constraints")
 */
[[nodiscard]] QuadraticParams solve_quadratic_shape(std::span<const double> xs,
                                                    const ConstraintSet& constraints,
                                                    QuadraticBranch branch);

[[nodiscard]] std::vector<double> quadratic(std::span<const double> xs,
                                            const QuadraticParams& params);

/// y'_k = 2 Y(x_k) - y_k.
[[nodiscard]] DatasetPair reflect_across_line(const DatasetPair& data,
                                              const ConstraintSet& constraints);

/// Warns (does not throw) when (b0' - b0)(b1' - b1) >= 0.
[[nodiscard]] std::vector<double> linear_outlier(std::span<const double> xs,
                                                 const ConstraintSet& constraints,
                                                 const LinearOutlier& spec,
                                                 Warnings* warnings = nullptr);

/// @throws std::invalid_argument unless x takes exactly two distinct values
[[nodiscard]] std::vector<double> bimodal_noise(std::span<const double> xs,
                                                const ConstraintSet& constraints,
                                                double noise_sd, std::uint64_t seed);

[[nodiscard]] std::vector<double> quartic(std::span<const double> xs,
                                          const ConstraintSet& constraints, const Quartic& spec);

/// Initial y-vector for any shape family.
[[nodiscard]] std::vector<double> evaluate(const ShapeSpec& shape, std::span<const double> xs,
                                           const ConstraintSet& constraints,
                                           Warnings* warnings = nullptr);

}  // namespace shapes
}  // namespace degen
