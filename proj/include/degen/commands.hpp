#pragma once

#include "degen/adjust.hpp"
#include "degen/constraints.hpp"
#include "degen/report_io.hpp"
#include "degen/shapes.hpp"
#include "degen/xgen.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

namespace degen::cli {

/// Everything one `generate` invocation needs.
struct RunConfig {
    ConstraintSet constraints = ConstraintSet::anscombe();
    std::variant<XGridSpec, std::vector<double>> x = XGridSpec{11, 9.0, 11.0, XFamily::Uniform};
    ShapeSpec shape = OnLine{};
    GenerationPlan plan;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    int max_attempts = 1;
    std::filesystem::path output_dir = ".";
    io::ReportFormat report_format = io::ReportFormat::Text;
    double tolerance = 1e-6;
};

/// Exit codes shared by the commands.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Directory named by DEGEN_OUTPUT_DIR, or "." when unset.
[[nodiscard]] std::filesystem::path default_output_dir();

/// Shape with its seed replaced (shapes without randomness are returned as is).
[[nodiscard]] ShapeSpec with_seed(const ShapeSpec& shape, std::uint64_t seed);

/// Seed used for dataset `ordinal` (0-based) on retry `attempt` (0-based).
[[nodiscard]] std::uint64_t dataset_seed(const RunConfig& config, std::size_t ordinal,
                                         int attempt);

/**
 * Generates config.count datasets into config.output_dir as
 * dataset_NNNN.csv plus dataset_NNNN.report.{txt,json}. Datasets are built
 * in parallel and written in order.
 *
 * Returns kOk iff every dataset was produced and verified.
 */
int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Prints the verification report of a CSV dataset; kOk iff it passes.
int cmd_verify(const std::filesystem::path& input, const ConstraintSet& constraints,
               double tolerance, io::ReportFormat format, std::ostream& out, std::ostream& err);

/// Writes anscombe_{I,II,III,IV}.csv, quartet_stats.csv and quartet_moments.csv.
int cmd_quartet(const std::filesystem::path& output_dir, std::ostream& out, std::ostream& err);

/// One SVG panel per input dataset.
int cmd_plot(std::span<const std::filesystem::path> inputs, const std::filesystem::path& output,
             std::ostream& out, std::ostream& err);

}  // namespace degen::cli
