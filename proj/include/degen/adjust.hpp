#pragma once

#include "degen/constraints.hpp"
#include "degen/shapes.hpp"
#include "degen/stats.hpp"
#include "degen/verify.hpp"
#include "degen/xgen.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace degen {

/// Sign of the square root in the variance quadratic. Both signs give a valid
/// dataset whenever the discriminant is positive.
enum class Branch { Plus, Minus };

/// Three distinct 0-based positions whose y-values are re-solved.
struct AdjustmentPlan {
    std::array<std::size_t, 3> indices{};
    Branch branch = Branch::Plus;
};

/**
 * y-deviations at the two outer selected points written as affine functions
 * of the deviation t at the inner one:
 *
 *   dy_first = a1 + b1 t,   dy_last = aN + bN t
 *
 * Substituting into the variance constraint gives
 *   t = -B ± sqrt(syy_prime + B^2 - C2).
 *
 * first/mid/last are the selected positions ordered by x (first has the
 * smallest x, last the largest). All sums over fixed points exclude every
 * selected position.
 */
struct AffineReduction {
    std::size_t first = 0;
    std::size_t mid = 0;
    std::size_t last = 0;
    double a1 = 0.0;
    double b1 = 0.0;
    double aN = 0.0;
    double bN = 0.0;
    double B = 0.0;
    double C2 = 0.0;
    double syy_prime = 0.0;
    double discriminant = 0.0;  // syy_prime + B^2 - C2
};

/// Both solutions of the minimal N = 3 problem on the uniform 3-point grid.
struct ThreePointSolution {
    DatasetPair plus;   // middle deviation +(2/√3) sqrt(σy² - B1²)
    DatasetPair minus;  // middle deviation -(2/√3) sqrt(σy² - B1²)
};

/// Residuals of the three y-constraints in sum form, by direct summation.
struct ClosureResiduals {
    double sum_dy = 0.0;    // Σ dy
    double sum_dy2 = 0.0;   // Σ dy² - S_yy
    double sum_dxdy = 0.0;  // Σ dx dy - S_xx β1
};

namespace adjust {

/// floor((n + 1) / 2), a 1-based position.
[[nodiscard]] std::size_t mid_index(std::size_t n);

/// {argmin x, mid_index(n) - 1, argmax x}; falls back to another position if
/// the middle coincides with an extreme.
[[nodiscard]] AdjustmentPlan default_plan(std::span<const double> xs, Branch branch);

[[nodiscard]] ThreePointSolution solve_three_point_minimal(const ConstraintSet& constraints);

[[nodiscard]] ClosureResiduals closure_residuals(const DatasetPair& data,
                                                 const ConstraintSet& constraints);

/// @throws std::invalid_argument for repeated/out-of-range indices or when
///         all three selected x-values are equal ("degenerate triple")
[[nodiscard]] AffineReduction reduce_triple(const DatasetPair& data,
                                            const ConstraintSet& constraints,
                                            const std::array<std::size_t, 3>& indices);

/**
 * Replaces the y-values at the three planned positions so the full dataset
 * meets ȳ, σy² and β1. Every other coordinate is left untouched.
 *
 * Warns when the selected x-spread is below 10% of the x-range.
 *
 * @throws InfeasibleError when the discriminant is negative
 */
[[nodiscard]] DatasetPair adjust_triple(const DatasetPair& data, const ConstraintSet& constraints,
                                        const AdjustmentPlan& plan,
                                        Warnings* warnings = nullptr);

/**
 * Rank-deficient variant for grids where the free points share one x-value.
 * The covariance constraint then only involves points off that x-value: a
 * single such point is forced onto the value it requires, several must
 * already satisfy it. The first two free indices are then solved for the
 * mean and variance constraints in closed form.
 */
[[nodiscard]] DatasetPair adjust_group(const DatasetPair& data, const ConstraintSet& constraints,
                                       std::span<const std::size_t> free_indices, Branch branch,
                                       Warnings* warnings = nullptr);

}  // namespace adjust

// Generation pipeline.

enum class PlanKind {
    Auto,    // chosen from the shape and grid
    None,    // shape already satisfies the constraints
    Triple,  // adjust_triple on `indices`
    Group,   // adjust_group on `indices`
};

struct GenerationPlan {
    PlanKind kind = PlanKind::Auto;
    Branch branch = Branch::Plus;
    std::vector<std::size_t> indices;  // 0-based
};

struct GenerateRequest {
    std::variant<XGridSpec, std::vector<double>> x;
    ShapeSpec shape;
    ConstraintSet constraints;
    GenerationPlan plan;
    double tolerance = 1e-9;
};

struct GeneratedDataset {
    DatasetPair data;
    VerificationReport report;
    Warnings warnings;
};

/**
 * x-grid, shape, adjustment, verification. Only verified datasets are
 * returned; failures raise InfeasibleError tagged with the failing stage
 * ("x-grid", "shape", "adjust", "verify").
 */
[[nodiscard]] GeneratedDataset generate(const GenerateRequest& request);

}  // namespace degen
