#pragma once

#include "degen/constraints.hpp"
#include "degen/stats.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace degen {

enum class Constraint { N, MeanX, VarX, MeanY, VarY, Beta1 };

inline constexpr std::array<Constraint, 6> kAllConstraints = {
    Constraint::N,     Constraint::MeanX, Constraint::VarX,
    Constraint::MeanY, Constraint::VarY,  Constraint::Beta1};

[[nodiscard]] std::string_view constraint_name(Constraint c) noexcept;

struct ConstraintCheck {
    Constraint constraint = Constraint::N;
    double target = 0.0;
    double measured = 0.0;
    double residual = 0.0;  // |measured - target|
    bool passed = false;
};

/// Outcome of checking a dataset against its six target statistics.
/// beta0 and r_squared are informational; they follow from the six.
struct VerificationReport {
    std::array<ConstraintCheck, 6> checks{};
    double beta0 = 0.0;
    double r_squared = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::optional<MomentReport> moments;  // absent when a variance is zero

    [[nodiscard]] const ConstraintCheck& check(Constraint c) const;
    [[nodiscard]] std::vector<std::string> failed() const;
};

namespace verify {

/**
 * Recomputes every statistic from the raw pairs (stats module only) and
 * compares each against its target with an absolute tolerance.
 *
 * Constraint failures are reported, not thrown. A degenerate dataset
 * (var(x) == 0) yields NaN measurements that fail.
 *
 * @throws std::invalid_argument if tolerance <= 0
 */
[[nodiscard]] VerificationReport verify(const DatasetPair& data, const ConstraintSet& constraints,
                                        double tolerance);

/// z-score skewness and kurtosis of both columns.
/// @throws std::invalid_argument when either variance is zero
[[nodiscard]] MomentReport moment_report(const DatasetPair& data);

}  // namespace verify
}  // namespace degen
