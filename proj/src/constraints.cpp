#include "degen/constraints.hpp"

#include <cmath>

namespace degen {

ConstraintSet::ConstraintSet(std::size_t n, double mean_x, double var_x, double mean_y,
                             double var_y, double beta1)
    : n_(n), mean_x_(mean_x), var_x_(var_x), mean_y_(mean_y), var_y_(var_y), beta1_(beta1) {
    if (n < 3) {
        throw std::invalid_argument("n must be at least 3");
    }
    for (double v : {mean_x, var_x, mean_y, var_y, beta1}) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("constraint values must be finite");
        }
    }
    if (var_x <= 0.0) {
        throw std::invalid_argument("var_x must be positive");
    }
    if (var_y <= 0.0) {
        throw std::invalid_argument("var_y must be positive");
    }
    // Allow for rounding in var_y == beta1^2 var_x, the all-on-the-line case.
    const double floor_var = beta1 * beta1 * var_x;
    if (var_y < floor_var * (1.0 - 1e-14)) {
        throw InfeasibleError("constraints", "infeasible: R² would exceed 1 (var_y " +
                                                 std::to_string(var_y) + " < beta1² var_x " +
                                                 std::to_string(floor_var) + ")");
    }
}

ConstraintSet ConstraintSet::anscombe() {
    return ConstraintSet(11, 9.0, 11.0, 7.5, 4.125, 0.5);
}

ConstraintSet ConstraintSet::with_n(std::size_t n) const {
    return ConstraintSet(n, mean_x_, var_x_, mean_y_, var_y_, beta1_);
}

}  // namespace degen
