#include "degen/verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace degen {

std::string_view constraint_name(Constraint c) noexcept {
    switch (c) {
        case Constraint::N: return "n";
        case Constraint::MeanX: return "mean_x";
        case Constraint::VarX: return "var_x";
        case Constraint::MeanY: return "mean_y";
        case Constraint::VarY: return "var_y";
        case Constraint::Beta1: return "beta1";
    }
    return "?";
}

const ConstraintCheck& VerificationReport::check(Constraint c) const {
    return checks[static_cast<std::size_t>(c)];
}

std::vector<std::string> VerificationReport::failed() const {
    std::vector<std::string> names;
    for (const auto& c : checks) {
        if (!c.passed) {
            names.emplace_back(constraint_name(c.constraint));
        }
    }
    return names;
}

namespace verify {

VerificationReport verify(const DatasetPair& data, const ConstraintSet& constraints,
                          double tolerance) {
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    const double sxx = stats::sum_squared_deviations(data.xs());
    const double syy = stats::sum_squared_deviations(data.ys());
    const double sxy = stats::sum_cross_deviations(data.xs(), data.ys());
    const double dof = static_cast<double>(data.size() - 1);
    const double mean_x = stats::mean(data.xs());
    const double mean_y = stats::mean(data.ys());
    const double beta1 = sxx > 0.0 ? sxy / sxx : nan;

    const std::array<double, 6> measured = {
        static_cast<double>(data.size()), mean_x, sxx / dof, mean_y, syy / dof, beta1};
    const std::array<double, 6> targets = {static_cast<double>(constraints.n()),
                                           constraints.mean_x(),
                                           constraints.var_x(),
                                           constraints.mean_y(),
                                           constraints.var_y(),
                                           constraints.beta1()};

    VerificationReport report;
    report.tolerance = tolerance;
    report.passed = true;
    for (std::size_t i = 0; i < kAllConstraints.size(); ++i) {
        ConstraintCheck& c = report.checks[i];
        c.constraint = kAllConstraints[i];
        c.target = targets[i];
        c.measured = measured[i];
        c.residual = std::fabs(measured[i] - targets[i]);
        // Sample size is an integer count and must match exactly.
        c.passed = c.constraint == Constraint::N ? measured[i] == targets[i]
                                                 : c.residual <= tolerance;
        report.passed = report.passed && c.passed;
    }

    report.beta0 = mean_y - beta1 * mean_x;
    report.r_squared = syy == 0.0 ? 1.0 : beta1 * beta1 * sxx / syy;
    if (sxx > 0.0 && syy > 0.0) {
        report.moments = moment_report(data);
    }
    return report;
}

MomentReport moment_report(const DatasetPair& data) {
    return {stats::zscore_moment(data.xs(), 3), stats::zscore_moment(data.xs(), 4),
            stats::zscore_moment(data.ys(), 3), stats::zscore_moment(data.ys(), 4)};
}

}  // namespace verify
}  // namespace degen
