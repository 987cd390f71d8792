#include "degen/commands.hpp"

#include "degen/anscombe.hpp"
#include "degen/dataset_io.hpp"
#include "degen/plot.hpp"
#include "degen/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

namespace degen::cli {

namespace {

std::string ordinal_name(std::size_t ordinal) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "dataset_%04zu", ordinal + 1);
    return buffer;
}

struct Outcome {
    std::optional<GeneratedDataset> result;
    std::string error;
    int attempts = 0;
};

Outcome run_one(const RunConfig& config, std::size_t ordinal) {
    Outcome outcome;
    for (int attempt = 0; attempt < std::max(1, config.max_attempts); ++attempt) {
        ++outcome.attempts;
        GenerateRequest request{config.x, with_seed(config.shape, dataset_seed(config, ordinal, attempt)),
                                config.constraints, config.plan, config.tolerance};
        try {
            outcome.result = generate(request);
            outcome.error.clear();
            return outcome;
        } catch (const InfeasibleError& e) {
            outcome.error = "[" + e.stage() + "] " + e.what();
        } catch (const std::exception& e) {
            outcome.error = e.what();
        }
    }
    return outcome;
}

std::string fixed3(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f", v);
    // Avoid "-0.000" for values that round to zero.
    return std::string(buffer) == "-0.000" ? "0.000" : buffer;
}

}  // namespace

std::filesystem::path default_output_dir() {
    if (const char* env = std::getenv("DEGEN_OUTPUT_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

ShapeSpec with_seed(const ShapeSpec& shape, std::uint64_t seed) {
    ShapeSpec copy = shape;
    if (auto* s = std::get_if<LinearNoise>(&copy)) s->seed = seed;
    if (auto* s = std::get_if<BimodalNoise>(&copy)) s->seed = seed;
    if (auto* s = std::get_if<Quartic>(&copy)) s->seed = seed;
    return copy;
}

std::uint64_t dataset_seed(const RunConfig& config, std::size_t ordinal, int attempt) {
    return config.seed + ordinal +
           static_cast<std::uint64_t>(attempt) * static_cast<std::uint64_t>(config.count);
}

int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.count < 1) {
        err << "error: count must be at least 1\n";
        return kUsage;
    }

    std::vector<Outcome> outcomes(config.count);
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, config.count);
    for (std::size_t start = 0; start < config.count; start += workers) {
        const std::size_t stop = std::min(config.count, start + workers);
        std::vector<std::future<Outcome>> batch;
        for (std::size_t i = start; i < stop; ++i) {
            batch.push_back(std::async(std::launch::async, run_one, std::cref(config), i));
        }
        for (std::size_t i = start; i < stop; ++i) {
            outcomes[i] = batch[i - start].get();
        }
    }

    const char* report_ext =
        config.report_format == io::ReportFormat::Json ? ".report.json" : ".report.txt";
    int status = kOk;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const std::string name = ordinal_name(i);
        const Outcome& o = outcomes[i];
        if (!o.result) {
            err << "error: " << name << ": " << o.error << "\n";
            status = kFailed;
            continue;
        }
        const auto csv_path = config.output_dir / (name + ".csv");
        io::write_text(csv_path, io::to_csv(o.result->data));
        io::write_text(config.output_dir / (name + report_ext),
                       io::format_report(o.result->report, config.report_format));
        for (const auto& w : o.result->warnings) {
            err << "warning: " << name << ": " << w << "\n";
        }
        out << csv_path.string() << ": " << (o.result->report.passed ? "PASS" : "FAIL") << "\n";
        if (!o.result->report.passed) {
            status = kFailed;
        }
    }
    return status;
}

int cmd_verify(const std::filesystem::path& input, const ConstraintSet& constraints,
               double tolerance, io::ReportFormat format, std::ostream& out, std::ostream& err) {
    try {
        const DatasetPair data = io::read_csv(input);
        const VerificationReport report = verify::verify(data, constraints, tolerance);
        out << io::format_report(report, format);
        if (!report.passed) {
            std::string failed;
            for (const auto& name : report.failed()) {
                failed += (failed.empty() ? "" : ", ") + name;
            }
            err << "violated: " << failed << "\n";
            return kFailed;
        }
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

int cmd_quartet(const std::filesystem::path& output_dir, std::ostream& out, std::ostream& err) {
    try {
        std::string stats_table = "dataset,n,mean_x,var_x,mean_y,var_y,beta1,beta0,r_squared\n";
        std::string moments_table = "dataset,skew_x,kurt_x,skew_y,kurt_y\n";
        for (std::size_t i = 0; i < anscombe::kCount; ++i) {
            const std::string name(anscombe::kNames[i]);
            const auto path = output_dir / ("anscombe_" + name + ".csv");
            io::write_text(path, anscombe::csv(i));
            out << path.string() << "\n";

            const DatasetPair data = anscombe::dataset(i);
            const RegressionFit fit = stats::linregress(data);
            stats_table += name + "," + std::to_string(data.size()) + "," +
                           fixed3(stats::mean(data.xs())) + "," +
                           fixed3(stats::variance(data.xs())) + "," +
                           fixed3(stats::mean(data.ys())) + "," +
                           fixed3(stats::variance(data.ys())) + "," + fixed3(fit.beta1) + "," +
                           fixed3(fit.beta0) + "," + fixed3(fit.r_squared) + "\n";

            const MomentReport m = verify::moment_report(data);
            moments_table += name + "," + fixed3(m.skew_x) + "," + fixed3(m.kurt_x) + "," +
                             fixed3(m.skew_y) + "," + fixed3(m.kurt_y) + "\n";
        }
        io::write_text(output_dir / "quartet_stats.csv", stats_table);
        io::write_text(output_dir / "quartet_moments.csv", moments_table);
        out << (output_dir / "quartet_stats.csv").string() << "\n"
            << (output_dir / "quartet_moments.csv").string() << "\n";
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
}

int cmd_plot(std::span<const std::filesystem::path> inputs, const std::filesystem::path& output,
             std::ostream& out, std::ostream& err) {
    try {
        std::vector<plot::Panel> panels;
        for (const auto& path : inputs) {
            panels.push_back({path.stem().string(), io::read_csv(path)});
        }
        io::write_text(output, plot::render_svg(panels));
        out << output.string() << "\n";
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
}

}  // namespace degen::cli
