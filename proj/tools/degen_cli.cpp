// degen: generate, verify and plot datasets that share prescribed regression
// statistics.

#include "degen/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace degen;

struct ConstraintOptions {
    std::size_t n = 11;
    double mean_x = 9.0;
    double var_x = 11.0;
    double mean_y = 7.5;
    double var_y = 4.125;
    double beta1 = 0.5;

    void bind(CLI::App& app) {
        app.add_option("--n", n, "Sample size N")->capture_default_str();
        app.add_option("--mean-x", mean_x, "Target mean of x")->capture_default_str();
        app.add_option("--var-x", var_x, "Target sample variance of x")->capture_default_str();
        app.add_option("--mean-y", mean_y, "Target mean of y")->capture_default_str();
        app.add_option("--var-y", var_y, "Target sample variance of y")->capture_default_str();
        app.add_option("--beta1", beta1, "Target regression slope")->capture_default_str();
    }

    [[nodiscard]] ConstraintSet build() const {
        return ConstraintSet(n, mean_x, var_x, mean_y, var_y, beta1);
    }
};

struct GenerateOptions {
    ConstraintOptions constraints;
    std::string x_family = "uniform";
    std::vector<double> x_values;
    std::string shape = "on-line";
    double noise_sd = 1.0;
    std::string quad_branch = "right";
    double outlier_beta0 = 0.0;
    double outlier_beta1 = 0.0;
    std::size_t outlier_index = 1;
    double outlier_y = 0.0;
    double f0 = 0.0;
    std::vector<double> roots = {4.150, 7.480, 10.710, 13.850};
    double jitter_sd = 0.0;
    std::string plan = "auto";
    std::string branch = "plus";
    std::vector<std::size_t> triple;
    std::vector<std::size_t> group;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    int max_attempts = 1;
    std::string out;
    std::string report_format = "text";
    double tol = 1e-6;
};

const std::map<std::string, XFamily> kXFamilies = {
    {"uniform", XFamily::Uniform},
    {"bimodal-plus", XFamily::BimodalPlus},
    {"bimodal-minus", XFamily::BimodalMinus},
};
const std::map<std::string, PlanKind> kPlans = {
    {"auto", PlanKind::Auto},
    {"none", PlanKind::None},
    {"triple", PlanKind::Triple},
    {"group", PlanKind::Group},
};
const std::map<std::string, io::ReportFormat> kFormats = {
    {"text", io::ReportFormat::Text},
    {"json", io::ReportFormat::Json},
};

// Config files are only read by the root app. Flat keys belong to `generate`.
class GenerateConfig : public CLI::ConfigINI {
public:
    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        auto items = CLI::ConfigINI::from_config(input);
        for (auto& item : items) {
            if (item.parents.empty()) item.parents = {"generate"};
        }
        return items;
    }
};

std::vector<std::string> keys(const auto& map) {
    std::vector<std::string> out;
    for (const auto& [k, v] : map) out.push_back(k);
    return out;
}

ShapeSpec build_shape(const GenerateOptions& o) {
    if (o.shape == "on-line") return OnLine{};
    if (o.shape == "linear-noise") return LinearNoise{o.noise_sd, o.seed};
    if (o.shape == "bimodal-noise") return BimodalNoise{o.noise_sd, o.seed};
    if (o.shape == "quadratic") {
        return Quadratic{o.quad_branch == "left" ? QuadraticBranch::Left : QuadraticBranch::Right};
    }
    if (o.shape == "linear-outlier") {
        if (o.outlier_index < 1) {
            throw CLI::ValidationError("--outlier-index", "positions are 1-based");
        }
        return LinearOutlier{o.outlier_beta0, o.outlier_beta1, o.outlier_index - 1, o.outlier_y};
    }
    if (o.roots.size() != 4) {
        throw CLI::ValidationError("--roots", "quartic shape needs exactly four roots");
    }
    return Quartic{o.f0, {o.roots[0], o.roots[1], o.roots[2], o.roots[3]}, o.jitter_sd, o.seed};
}

cli::RunConfig build_config(const GenerateOptions& o) {
    cli::RunConfig config;
    config.constraints = o.constraints.build();
    if (!o.x_values.empty()) {
        config.x = o.x_values;
    } else {
        config.x = XGridSpec{o.constraints.n, o.constraints.mean_x, o.constraints.var_x,
                             kXFamilies.at(o.x_family)};
    }
    config.shape = build_shape(o);
    config.plan.kind = kPlans.at(o.plan);
    config.plan.branch = o.branch == "minus" ? Branch::Minus : Branch::Plus;
    if (!o.triple.empty() && !o.group.empty()) {
        throw CLI::ValidationError("--triple/--group", "give one adjustment set, not both");
    }
    const auto& positions = o.triple.empty() ? o.group : o.triple;
    for (std::size_t p : positions) {
        if (p < 1) {
            throw CLI::ValidationError("--triple/--group", "positions are 1-based");
        }
        config.plan.indices.push_back(p - 1);
    }
    if (config.plan.kind == PlanKind::Auto) {
        if (!o.triple.empty()) config.plan.kind = PlanKind::Triple;
        if (!o.group.empty()) config.plan.kind = PlanKind::Group;
    }
    config.count = o.count;
    config.seed = o.seed;
    config.max_attempts = o.max_attempts;
    config.output_dir = o.out.empty() ? cli::default_output_dir() : std::filesystem::path(o.out);
    config.report_format = kFormats.at(o.report_format);
    config.tolerance = o.tol;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate and check paired datasets with prescribed regression statistics"};
    app.require_subcommand(1);

    app.set_config("--config", "", "Flat key = value file for generate; keys are the long flag names");
    app.config_formatter(std::make_shared<GenerateConfig>());

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Generate datasets meeting the constraints");
    generate->fallthrough();
    generate->footer("Options may also come from a file: degen generate --config run.ini");
    gen.constraints.bind(*generate);
    generate->add_option("--x-family", gen.x_family, "x-grid family")
        ->check(CLI::IsMember(keys(kXFamilies)))
        ->capture_default_str();
    generate->add_option("--x-values", gen.x_values, "Explicit x grid (comma separated)")
        ->delimiter(',');
    generate->add_option("--shape", gen.shape, "Shape function")
        ->check(CLI::IsMember({"on-line", "linear-noise", "quadratic", "linear-outlier",
                               "bimodal-noise", "quartic"}))
        ->capture_default_str();
    generate->add_option("--noise-sd", gen.noise_sd, "Noise sd for noise shapes")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    generate->add_option("--quad-branch", gen.quad_branch, "Quadratic extremum side")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    generate->add_option("--outlier-beta0", gen.outlier_beta0, "Intercept of the outlier shape");
    generate->add_option("--outlier-beta1", gen.outlier_beta1, "Slope of the outlier shape");
    generate->add_option("--outlier-index", gen.outlier_index, "1-based outlier position")
        ->capture_default_str();
    generate->add_option("--outlier-y", gen.outlier_y, "Outlier y-value");
    generate->add_option("--f0", gen.f0, "Quartic weight")->capture_default_str();
    generate->add_option("--roots", gen.roots, "Quartic roots h1,h2,h3,h4")->delimiter(',');
    generate->add_option("--jitter-sd", gen.jitter_sd, "Quartic vertical jitter sd")
        ->check(CLI::NonNegativeNumber);
    generate->add_option("--plan", gen.plan, "Adjustment plan")
        ->check(CLI::IsMember(keys(kPlans)))
        ->capture_default_str();
    generate->add_option("--branch", gen.branch, "Degeneracy branch")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    generate->add_option("--triple", gen.triple, "1-based positions p1,p2,p3 to re-solve")
        ->delimiter(',')
        ->expected(3);
    generate->add_option("--group", gen.group, "1-based positions sharing one x to re-solve")
        ->delimiter(',');
    generate->add_option("--count", gen.count, "Number of datasets")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--seed", gen.seed, "Base seed; dataset i uses seed + i")
        ->capture_default_str();
    generate->add_option("--max-attempts", gen.max_attempts, "Retries with fresh seeds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--out", gen.out, "Output directory (default $DEGEN_OUTPUT_DIR or .)");
    generate->add_option("--report-format", gen.report_format, "Report format")
        ->check(CLI::IsMember(keys(kFormats)))
        ->capture_default_str();
    generate->add_option("--tol", gen.tol, "Absolute verification tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    ConstraintOptions verify_constraints;
    std::string verify_input;
    double verify_tol = 1e-6;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "Check a CSV dataset against the constraints");
    verify->add_option("input", verify_input, "Dataset CSV")->required();
    verify_constraints.bind(*verify);
    verify->add_option("--tol", verify_tol, "Absolute tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--report-format", verify_format, "Report format")
        ->check(CLI::IsMember(keys(kFormats)))
        ->capture_default_str();

    std::string quartet_out;
    auto* quartet = app.add_subcommand("quartet", "Write the Anscombe quartet and its tables");
    quartet->add_option("--out", quartet_out, "Output directory (default $DEGEN_OUTPUT_DIR or .)");

    std::vector<std::string> plot_inputs;
    std::string plot_output = "plot.svg";
    auto* plot = app.add_subcommand("plot", "Render datasets as an SVG scatter grid");
    plot->add_option("inputs", plot_inputs, "Dataset CSV files")->required();
    plot->add_option("-o,--out", plot_output, "SVG output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kUsage;
    }

    try {
        if (*generate) {
            return cli::cmd_generate(build_config(gen), std::cout, std::cerr);
        }
        if (*verify) {
            return cli::cmd_verify(verify_input, verify_constraints.build(), verify_tol,
                                   kFormats.at(verify_format), std::cout, std::cerr);
        }
        if (*quartet) {
            const auto dir =
                quartet_out.empty() ? cli::default_output_dir() : std::filesystem::path(quartet_out);
            return cli::cmd_quartet(dir, std::cout, std::cerr);
        }
        if (*plot) {
            std::vector<std::filesystem::path> paths(plot_inputs.begin(), plot_inputs.end());
            return cli::cmd_plot(paths, plot_output, std::cout, std::cerr);
        }
    } catch (const InfeasibleError& e) {
        std::cerr << "error [" << e.stage() << "]: " << e.what() << "\n";
        return cli::kFailed;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kUsage;
    }
    return cli::kOk;
}
