#include "degen/shapes.hpp"

#include "degen/random.hpp"
#include "degen/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace degen::shapes {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double power_sum(std::span<const double> xs, double centre, int power) {
    std::vector<double> terms(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        terms[k] = std::pow(xs[k] - centre, power);
    }
    return stats::sum(terms);
}

// sum_k (x_k - x̄)(x_k - x*)^2
double covariance_denominator(std::span<const double> xs, double xstar) {
    const double mx = stats::mean(xs);
    std::vector<double> terms(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double d = xs[k] - xstar;
        terms[k] = (xs[k] - mx) * d * d;
    }
    return stats::sum(terms);
}

void check_distinct_x(std::span<const double> xs) {
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
    if (distinct < 3) {
        throw std::invalid_argument("quadratic shape needs at least 3 distinct x values");
    }
}

// beta1 == 0: the covariance constraint forces the denominator to vanish.
QuadraticParams solve_flat_quadratic(std::span<const double> xs, const ConstraintSet& constraints,
                                     QuadraticBranch branch) {
    const double mx = stats::mean(xs);
    const double sxx = stats::sum_squared_deviations(xs);
    const double xstar = mx + power_sum(xs, mx, 3) / (2.0 * sxx);

    std::vector<double> basis(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        basis[k] = (xs[k] - xstar) * (xs[k] - xstar);
    }
    const double spread = stats::sum_squared_deviations(basis);
    if (spread == 0.0) {
        throw InfeasibleError("shape", "no quadratic shape exists for these constraints");
    }
    const double n = static_cast<double>(xs.size());
    double alpha = std::sqrt((n - 1.0) * constraints.var_y() / spread);
    if (branch == QuadraticBranch::Right) {
        alpha = -alpha;
    }
    const double q0 = constraints.mean_y() - alpha * stats::mean(basis);
    return {alpha, q0, xstar};
}

}  // namespace

double eval_line(const ConstraintSet& constraints, double x) {
    return constraints.line(x);
}

std::vector<double> linear_noise(std::span<const double> xs, const ConstraintSet& constraints,
                                 double noise_sd, std::uint64_t seed) {
    if (!(noise_sd >= 0.0)) {
        throw std::invalid_argument("noise_sd must be non-negative");
    }
    NormalSource normal(seed);
    std::vector<double> ys(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        ys[k] = constraints.line(xs[k]) + normal.normal(0.0, noise_sd);
    }
    return ys;
}

QuadraticParams quadratic_params_at(std::span<const double> xs, const ConstraintSet& constraints,
                                    double xstar) {
    const double n = static_cast<double>(xs.size());
    const double sxx = stats::sum_squared_deviations(xs);
    const double alpha = constraints.beta1() * sxx / covariance_denominator(xs, xstar);
    const double q0 = constraints.mean_y() - alpha / n * power_sum(xs, xstar, 2);
    return {alpha, q0, xstar};
}

double alpha_cubic_denominator(std::span<const double> xs, const ConstraintSet& constraints,
                               double xstar) {
    return constraints.beta1() * constraints.sxx() / power_sum(xs, xstar, 3);
}

double quadratic_variance_gap(std::span<const double> xs, const ConstraintSet& constraints,
                              double xstar) {
    const QuadraticParams p = quadratic_params_at(xs, constraints, xstar);
    if (!std::isfinite(p.alpha)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const double n = static_cast<double>(xs.size());
    const double dq = p.q0 - constraints.mean_y();
    const double var_star =
        p.alpha * p.alpha / (n - 1.0) * power_sum(xs, xstar, 4) - n * dq * dq / (n - 1.0);
    return var_star - constraints.var_y();
}

std::vector<double> quadratic_roots(std::span<const double> xs, const ConstraintSet& constraints) {
    const auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
    const double range = *hi_it - *lo_it;
    const auto gap = [&](double xstar) { return quadratic_variance_gap(xs, constraints, xstar); };

    std::vector<double> found;
    for (const auto& bracket :
         roots::scan_sign_changes(gap, *lo_it - 2.0 * range, *hi_it + 2.0 * range, 200)) {
        found.push_back(roots::bisect_secant(gap, bracket).x);
    }
    return found;
}

QuadraticParams solve_quadratic_shape(std::span<const double> xs,
                                      const ConstraintSet& constraints, QuadraticBranch branch) {
    check_distinct_x(xs);
    if (constraints.beta1() == 0.0) {
        return solve_flat_quadratic(xs, constraints, branch);
    }

    const double mx = stats::mean(xs);
    const std::vector<double> candidates = quadratic_roots(xs, constraints);
    const double* best = nullptr;
    for (const double& root : candidates) {
        const bool on_side = branch == QuadraticBranch::Left ? root < mx : root > mx;
        if (on_side && (best == nullptr || std::fabs(root - mx) < std::fabs(*best - mx))) {
            best = &root;
        }
    }
    if (best == nullptr) {
        throw InfeasibleError("shape", "no quadratic shape exists for these constraints");
    }
    return quadratic_params_at(xs, constraints, *best);
}

std::vector<double> quadratic(std::span<const double> xs, const QuadraticParams& params) {
    std::vector<double> ys(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double d = xs[k] - params.xstar;
        ys[k] = params.q0 + params.alpha * d * d;
    }
    return ys;
}

DatasetPair reflect_across_line(const DatasetPair& data, const ConstraintSet& constraints) {
    std::vector<double> ys(data.size());
    for (std::size_t k = 0; k < data.size(); ++k) {
        ys[k] = 2.0 * constraints.line(data.xs()[k]) - data.ys()[k];
    }
    return DatasetPair(std::vector<double>(data.xs().begin(), data.xs().end()), std::move(ys));
}

std::vector<double> linear_outlier(std::span<const double> xs, const ConstraintSet& constraints,
                                   const LinearOutlier& spec, Warnings* warnings) {
    if (spec.outlier_index >= xs.size()) {
        throw std::out_of_range("outlier index " + std::to_string(spec.outlier_index) +
                                " outside 0.." + std::to_string(xs.size() - 1));
    }
    if (warnings != nullptr &&
        !((spec.beta0p - constraints.beta0()) * (spec.beta1p - constraints.beta1()) < 0.0)) {
        warnings->push_back(
            "outlier shape line does not cross the regression line "
            "((beta0' - beta0)(beta1' - beta1) >= 0)");
    }
    std::vector<double> ys(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        ys[k] = spec.beta0p + spec.beta1p * xs[k];
    }
    ys[spec.outlier_index] = spec.outlier_y;
    return ys;
}

std::vector<double> bimodal_noise(std::span<const double> xs, const ConstraintSet& constraints,
                                  double noise_sd, std::uint64_t seed) {
    if (!(noise_sd >= 0.0)) {
        throw std::invalid_argument("noise_sd must be non-negative");
    }
    std::map<double, std::size_t> counts;
    for (double x : xs) {
        ++counts[x];
    }
    if (counts.size() != 2) {
        throw std::invalid_argument("bimodal noise shape needs exactly two distinct x values, got " +
                                    std::to_string(counts.size()));
    }
    // The lone value is the less frequent one; on a tie, the one in the last slot.
    const auto first = counts.begin();
    const auto second = std::next(first);
    double lone = xs.back();
    if (first->second != second->second) {
        lone = first->second < second->second ? first->first : second->first;
    }

    NormalSource normal(seed);
    std::vector<double> ys(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        ys[k] = xs[k] == lone ? constraints.line(xs[k])
                              : constraints.line(xs[k]) + normal.normal(0.0, noise_sd);
    }
    return ys;
}

std::vector<double> quartic(std::span<const double> xs, const ConstraintSet& constraints,
                            const Quartic& spec) {
    for (std::size_t i = 0; i < spec.roots.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.roots.size(); ++j) {
            if (spec.roots[i] == spec.roots[j]) {
                throw std::invalid_argument("quartic roots must be distinct");
            }
        }
    }
    if (!(spec.jitter_sd >= 0.0)) {
        throw std::invalid_argument("jitter_sd must be non-negative");
    }
    NormalSource normal(spec.seed);
    std::vector<double> ys(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        double product = spec.f0;
        for (double h : spec.roots) {
            product *= xs[k] - h;
        }
        ys[k] = constraints.line(xs[k]) + product;
        if (spec.jitter_sd > 0.0) {
            ys[k] += normal.normal(0.0, spec.jitter_sd);
        }
    }
    return ys;
}

std::vector<double> evaluate(const ShapeSpec& shape, std::span<const double> xs,
                             const ConstraintSet& constraints, Warnings* warnings) {
    return std::visit(
        Overloaded{
            [&](const LinearNoise& s) { return linear_noise(xs, constraints, s.noise_sd, s.seed); },
            [&](const Quadratic& s) {
                return quadratic(xs, solve_quadratic_shape(xs, constraints, s.branch));
            },
            [&](const LinearOutlier& s) { return linear_outlier(xs, constraints, s, warnings); },
            [&](const BimodalNoise& s) {
                return bimodal_noise(xs, constraints, s.noise_sd, s.seed);
            },
            [&](const Quartic& s) { return quartic(xs, constraints, s); },
            [&](const OnLine&) { return linear_noise(xs, constraints, 0.0, 0); },
        },
        shape);
}

}  // namespace degen::shapes
