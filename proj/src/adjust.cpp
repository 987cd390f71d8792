#include "degen/adjust.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace degen {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Deviations {
    std::vector<double> dx;
    std::vector<double> dy;
    double sxx_beta1 = 0.0;  // covariance target S_xx β1
    double syy = 0.0;        // variance target (N - 1) σy²
};

// x is measured about its own mean, y about the target mean. Once Σ dy = 0
// holds, Σ dx dy does not depend on the x centre.
Deviations deviations(const DatasetPair& data, const ConstraintSet& constraints) {
    if (data.size() != constraints.n()) {
        throw std::invalid_argument("dataset has " + std::to_string(data.size()) +
                                    " points but constraints expect " +
                                    std::to_string(constraints.n()));
    }
    Deviations d;
    const double mx = stats::mean(data.xs());
    d.dx.resize(data.size());
    d.dy.resize(data.size());
    for (std::size_t k = 0; k < data.size(); ++k) {
        d.dx[k] = data.xs()[k] - mx;
        d.dy[k] = data.ys()[k] - constraints.mean_y();
    }
    d.sxx_beta1 = stats::sum_squared_deviations(data.xs()) * constraints.beta1();
    d.syy = constraints.syy();
    return d;
}

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

void check_index(std::size_t index, std::size_t n) {
    if (index >= n) {
        throw std::out_of_range("index " + std::to_string(index) + " outside 0.." +
                                std::to_string(n - 1));
    }
}

// Solves [[1, 1], [p, q]] (u, v) = (r0, r1).
std::pair<double, double> solve_sum_and_moment(double p, double q, double r0, double r1) {
    const double det = q - p;
    return {(r0 * q - r1) / det, (r1 - p * r0) / det};
}

}  // namespace

namespace adjust {

std::size_t mid_index(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("mid_index needs n >= 3");
    }
    return (n + 1) / 2;
}

AdjustmentPlan default_plan(std::span<const double> xs, Branch branch) {
    if (xs.size() < 3) {
        throw std::invalid_argument("plan needs at least 3 points");
    }
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    const auto first = static_cast<std::size_t>(lo - xs.begin());
    // Last occurrence of the maximum so ties in a sorted grid pick the end.
    auto last = static_cast<std::size_t>(hi - xs.begin());
    for (std::size_t k = xs.size(); k-- > 0;) {
        if (xs[k] == *hi) {
            last = k;
            break;
        }
    }
    std::size_t mid = mid_index(xs.size()) - 1;
    for (std::size_t k = 0; mid == first || mid == last; ++k) {
        mid = k;
    }
    return {{first, mid, last}, branch};
}

ThreePointSolution solve_three_point_minimal(const ConstraintSet& constraints) {
    if (constraints.n() != 3) {
        throw std::invalid_argument("minimal solution needs n == 3");
    }
    const std::vector<double> xs = xgen::uniform_x({3, constraints.mean_x(), constraints.var_x()});
    const double dx3 = xs[2] - xs[1];
    const double b1 = constraints.beta1() * constraints.var_x() / dx3;
    double gap = constraints.var_y() - b1 * b1;
    if (gap < 0.0) {
        // ConstraintSet already rejects var_y < β1² var_x beyond rounding.
        if (gap < -1e-12 * constraints.var_y()) {
            throw InfeasibleError("adjust", "infeasible: variance below regression minimum");
        }
        gap = 0.0;
    }

    const auto make = [&](double sign) {
        const double dy2 = sign * 2.0 / std::sqrt(3.0) * std::sqrt(gap);
        const double my = constraints.mean_y();
        return DatasetPair(xs, {my - 0.5 * dy2 - b1, my + dy2, my - 0.5 * dy2 + b1});
    };
    return {make(1.0), make(-1.0)};
}

ClosureResiduals closure_residuals(const DatasetPair& data, const ConstraintSet& constraints) {
    const Deviations d = deviations(data, constraints);
    std::vector<double> dy2(d.dy.size());
    std::vector<double> dxdy(d.dy.size());
    for (std::size_t k = 0; k < d.dy.size(); ++k) {
        dy2[k] = d.dy[k] * d.dy[k];
        dxdy[k] = d.dx[k] * d.dy[k];
    }
    return {stats::sum(d.dy), stats::sum(dy2) - d.syy, stats::sum(dxdy) - d.sxx_beta1};
}

AffineReduction reduce_triple(const DatasetPair& data, const ConstraintSet& constraints,
                              const std::array<std::size_t, 3>& indices) {
    const std::size_t n = data.size();
    for (std::size_t i : indices) {
        check_index(i, n);
    }
    if (indices[0] == indices[1] || indices[0] == indices[2] || indices[1] == indices[2]) {
        throw std::invalid_argument("adjustment indices must be distinct");
    }

    const Deviations d = deviations(data, constraints);

    std::array<std::size_t, 3> order = indices;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d.dx[a] < d.dx[b]; });
    AffineReduction r;
    r.first = order[0];
    r.mid = order[1];
    r.last = order[2];
    const double dx1 = d.dx[r.first];
    const double dxm = d.dx[r.mid];
    const double dxN = d.dx[r.last];
    if (dx1 == dxN) {
        throw std::invalid_argument("degenerate triple: all three x equal; use adjust_group");
    }

    std::vector<double> fixed_dy;
    std::vector<double> fixed_dy2;
    std::vector<double> fixed_dxdy;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == r.first || k == r.mid || k == r.last) {
            continue;
        }
        fixed_dy.push_back(d.dy[k]);
        fixed_dy2.push_back(d.dy[k] * d.dy[k]);
        fixed_dxdy.push_back(d.dx[k] * d.dy[k]);
    }
    const double sum_dy = stats::sum(fixed_dy);
    const double sum_dy2 = stats::sum(fixed_dy2);
    const double sum_dxdy = stats::sum(fixed_dxdy);

    // Mean and covariance constraints restricted to the two outer unknowns:
    //   dy1 + dyN         = -sum_dy - t
    //   dx1 dy1 + dxN dyN = S_xx β1 - sum_dxdy - dxm t
    // Constant and t-coefficient parts solved separately.
    const auto [a1, aN] =
        solve_sum_and_moment(dx1, dxN, -sum_dy, d.sxx_beta1 - sum_dxdy);
    const auto [b1, bN] = solve_sum_and_moment(dx1, dxN, -1.0, -dxm);
    r.a1 = a1;
    r.aN = aN;
    r.b1 = b1;
    r.bN = bN;

    const double denom = 1.0 + b1 * b1 + bN * bN;
    r.syy_prime = (d.syy - sum_dy2) / denom;
    r.B = (a1 * b1 + aN * bN) / denom;
    r.C2 = (a1 * a1 + aN * aN) / denom;
    r.discriminant = r.syy_prime + r.B * r.B - r.C2;
    return r;
}

DatasetPair adjust_triple(const DatasetPair& data, const ConstraintSet& constraints,
                          const AdjustmentPlan& plan, Warnings* warnings) {
    const AffineReduction r = reduce_triple(data, constraints, plan.indices);

    // The discriminant is a difference of O(S_yy) terms; allow for rounding
    // when the solution is a double root.
    double disc = r.discriminant;
    const double scale = std::max({std::fabs(r.syy_prime), r.B * r.B, r.C2, 1.0});
    if (disc < 0.0) {
        if (disc < -1e-13 * scale) {
            throw InfeasibleError(
                "adjust",
                "infeasible: fixed points carry too much variance/covariance (discriminant = " +
                    format_double(r.discriminant) + ")");
        }
        disc = 0.0;
    }

    if (warnings != nullptr) {
        const auto [lo, hi] = std::minmax_element(data.xs().begin(), data.xs().end());
        const double spread = data.xs()[r.last] - data.xs()[r.first];
        if (spread < 0.1 * (*hi - *lo)) {
            warnings->push_back("selected x-values span " + format_double(spread) +
                                ", under 10% of the x-range; adjusted y-values may be extreme");
        }
    }

    const double root = std::sqrt(disc);
    const double t = plan.branch == Branch::Plus ? -r.B + root : -r.B - root;
    const double my = constraints.mean_y();

    DatasetPair out = data;
    out.set_y(r.first, my + r.a1 + r.b1 * t);
    out.set_y(r.mid, my + t);
    out.set_y(r.last, my + r.aN + r.bN * t);
    return out;
}

DatasetPair adjust_group(const DatasetPair& data, const ConstraintSet& constraints,
                         std::span<const std::size_t> free_indices, Branch branch,
                         Warnings* warnings) {
    const std::size_t n = data.size();
    if (free_indices.size() < 2) {
        throw std::invalid_argument("group adjustment needs at least two free indices");
    }
    for (std::size_t i : free_indices) {
        check_index(i, n);
    }
    const std::size_t p = free_indices[0];
    const std::size_t q = free_indices[1];
    if (p == q) {
        throw std::invalid_argument("group adjustment indices must be distinct");
    }
    const double xa = data.xs()[p];
    for (std::size_t i : free_indices) {
        if (data.xs()[i] != xa) {
            throw std::invalid_argument("group adjustment indices must share one x-value");
        }
    }

    Deviations d = deviations(data, constraints);
    DatasetPair out = data;
    const double dxa = d.dx[p];

    // With Σ dy = 0 the covariance constraint reduces to
    //   Σ_{x_k != x_a} (dx_k - dx_a) dy_k = S_xx β1
    std::vector<std::size_t> off_group;
    for (std::size_t k = 0; k < n; ++k) {
        if (data.xs()[k] != xa) {
            off_group.push_back(k);
        }
    }
    if (off_group.empty()) {
        throw std::invalid_argument("all x identical; no regression possible");
    }
    if (off_group.size() == 1) {
        const std::size_t o = off_group.front();
        const double forced = d.sxx_beta1 / (d.dx[o] - dxa);
        const double y_new = constraints.mean_y() + forced;
        if (warnings != nullptr && std::fabs(y_new - data.ys()[o]) > 1e-12 * std::max(1.0, std::fabs(y_new))) {
            warnings->push_back("outlier at position " + std::to_string(o) + " moved from y = " +
                                format_double(data.ys()[o]) + " to " + format_double(y_new) +
                                " by the covariance constraint");
        }
        d.dy[o] = forced;
        out.set_y(o, y_new);
    } else {
        std::vector<double> terms;
        for (std::size_t k : off_group) {
            terms.push_back((d.dx[k] - dxa) * d.dy[k]);
        }
        const double residual = stats::sum(terms) - d.sxx_beta1;
        if (std::fabs(residual) > 1e-9 * std::max(1.0, std::fabs(d.sxx_beta1))) {
            throw InfeasibleError("adjust",
                                  "outlier covariance requirement inconsistent with fixed y-values "
                                  "(residual " + format_double(residual) + ")");
        }
    }

    std::vector<double> rest_dy;
    std::vector<double> rest_dy2;
    for (std::size_t k = 0; k < n; ++k) {
        if (k != p && k != q) {
            rest_dy.push_back(d.dy[k]);
            rest_dy2.push_back(d.dy[k] * d.dy[k]);
        }
    }
    // dy_p + dy_q = c1, dy_p² + dy_q² = c2
    const double c1 = -stats::sum(rest_dy);
    const double c2 = d.syy - stats::sum(rest_dy2);
    double disc = 2.0 * c2 - c1 * c1;
    if (disc < 0.0) {
        if (disc < -1e-13 * std::max({std::fabs(c2), c1 * c1, 1.0})) {
            throw InfeasibleError("adjust", "infeasible pair adjustment (2 c2 - c1² = " +
                                                format_double(disc) + ")");
        }
        disc = 0.0;
    }
    const double half_root = 0.5 * std::sqrt(disc);
    const double dyp = branch == Branch::Plus ? 0.5 * c1 + half_root : 0.5 * c1 - half_root;
    out.set_y(p, constraints.mean_y() + dyp);
    out.set_y(q, constraints.mean_y() + (c1 - dyp));
    return out;
}

}  // namespace adjust

namespace {

std::vector<double> build_x(const GenerateRequest& request) {
    return std::visit(
        Overloaded{
            [&](const XGridSpec& spec) {
                if (spec.n != request.constraints.n()) {
                    throw std::invalid_argument("x-grid size differs from constraint n");
                }
                return xgen::make_x(spec);
            },
            [&](const std::vector<double>& values) {
                if (values.size() != request.constraints.n()) {
                    throw std::invalid_argument("explicit x size differs from constraint n");
                }
                return xgen::custom_x(values);
            },
        },
        request.x);
}

std::size_t distinct_count(std::span<const double> xs) {
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Two positions sharing the most common x-value.
std::vector<std::size_t> default_group(std::span<const double> xs) {
    std::size_t best_count = 0;
    double best_x = xs.front();
    for (double candidate : xs) {
        const auto c = static_cast<std::size_t>(std::count(xs.begin(), xs.end(), candidate));
        if (c > best_count) {
            best_count = c;
            best_x = candidate;
        }
    }
    if (best_count < 2) {
        throw std::invalid_argument("no two points share an x-value for group adjustment");
    }
    std::vector<std::size_t> group;
    for (std::size_t k = 0; k < xs.size() && group.size() < 2; ++k) {
        if (xs[k] == best_x) {
            group.push_back(k);
        }
    }
    return group;
}

GenerationPlan resolve_plan(const GenerateRequest& request, std::span<const double> xs) {
    GenerationPlan plan = request.plan;
    if (plan.kind != PlanKind::Auto) {
        return plan;
    }
    if (std::holds_alternative<Quadratic>(request.shape)) {
        plan.kind = PlanKind::None;
    } else if (std::holds_alternative<BimodalNoise>(request.shape) || distinct_count(xs) == 2) {
        plan.kind = PlanKind::Group;
        plan.indices = default_group(xs);
    } else {
        plan.kind = PlanKind::Triple;
        const AdjustmentPlan base = adjust::default_plan(xs, plan.branch);
        plan.indices.assign(base.indices.begin(), base.indices.end());
        if (const auto* outlier = std::get_if<LinearOutlier>(&request.shape)) {
            const std::size_t o = outlier->outlier_index;
            if (o != plan.indices[0] && o != plan.indices[2]) {
                plan.indices[1] = o;
            }
        }
    }
    return plan;
}

template <class F>
auto run_stage(const char* stage, F&& body) {
    try {
        return body();
    } catch (const InfeasibleError& e) {
        throw InfeasibleError(stage, e.what());
    } catch (const std::invalid_argument& e) {
        throw InfeasibleError(stage, std::string("invalid input: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw InfeasibleError(stage, std::string("invalid input: ") + e.what());
    }
}

}  // namespace

GeneratedDataset generate(const GenerateRequest& request) {
    const ConstraintSet& constraints = request.constraints;
    Warnings warnings;

    std::vector<double> xs = run_stage("x-grid", [&] { return build_x(request); });
    std::vector<double> ys =
        run_stage("shape", [&] { return shapes::evaluate(request.shape, xs, constraints, &warnings); });

    DatasetPair data = run_stage("adjust", [&] {
        DatasetPair seeded(xs, ys);
        const GenerationPlan plan = resolve_plan(request, xs);
        switch (plan.kind) {
            case PlanKind::Triple: {
                if (plan.indices.size() != 3) {
                    throw std::invalid_argument("triple plan needs exactly 3 indices");
                }
                const AdjustmentPlan triple{{plan.indices[0], plan.indices[1], plan.indices[2]},
                                            plan.branch};
                return adjust::adjust_triple(seeded, constraints, triple, &warnings);
            }
            case PlanKind::Group:
                return adjust::adjust_group(seeded, constraints, plan.indices, plan.branch,
                                            &warnings);
            case PlanKind::None:
            case PlanKind::Auto:
                break;
        }
        return seeded;
    });

    VerificationReport report = verify::verify(data, constraints, request.tolerance);
    if (!report.passed) {
        std::string failed;
        for (const auto& name : report.failed()) {
            failed += (failed.empty() ? "" : ", ") + name;
        }
        throw InfeasibleError("verify", "generated dataset failed verification on: " + failed);
    }
    return {std::move(data), std::move(report), std::move(warnings)};
}

}  // namespace degen
