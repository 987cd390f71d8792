#include "degen/commands.hpp"
#include "degen/dataset_io.hpp"

#include "oracle.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace degen;
using Catch::Matchers::ContainsSubstring;

namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "degen_test_commands" / name;
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("generate writes verified datasets", "[commands]") {
    cli::RunConfig config;
    config.shape = LinearNoise{0.5, 0};
    config.count = 6;
    config.seed = 100;
    config.max_attempts = 10;
    config.tolerance = 1e-9;
    config.output_dir = fresh_dir("generate");
    std::ostringstream out, err;
    REQUIRE(cli::cmd_generate(config, out, err) == cli::kOk);
    for (int i = 1; i <= 6; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "dataset_%04d", i);
        const fs::path csv = config.output_dir / (std::string(name) + ".csv");
        REQUIRE(fs::exists(csv));
        CHECK(fs::exists(config.output_dir / (std::string(name) + ".report.txt")));
        CHECK(oracle::max_residual(io::read_csv(csv), config.constraints) < 1e-9);
    }
    CHECK(out.str().find("FAIL") == std::string::npos);
}

TEST_CASE("generate is reproducible for a seed", "[commands]") {
    cli::RunConfig config;
    config.shape = LinearNoise{0.8, 0};
    config.count = 3;
    config.seed = 9;
    config.report_format = io::ReportFormat::Json;
    std::ostringstream out, err;
    config.output_dir = fresh_dir("repro_a");
    REQUIRE(cli::cmd_generate(config, out, err) == cli::kOk);
    config.output_dir = fresh_dir("repro_b");
    REQUIRE(cli::cmd_generate(config, out, err) == cli::kOk);
    for (const char* f : {"dataset_0001.csv", "dataset_0003.csv", "dataset_0002.report.json"}) {
        CHECK(slurp(fresh_dir("repro_a").parent_path() / "repro_a" / f) ==
              slurp(fresh_dir("repro_b").parent_path() / "repro_b" / f));
    }
}

TEST_CASE("heavy noise leaves some seeds infeasible", "[commands]") {
    // Residual sd of the targets is about 1.17; unit noise often uses it up.
    cli::RunConfig config;
    config.shape = LinearNoise{1.0, 0};
    config.count = 6;
    config.seed = 100;
    config.output_dir = fresh_dir("heavy");
    std::ostringstream out, err;
    CHECK(cli::cmd_generate(config, out, err) == cli::kFailed);
    CHECK_THAT(err.str(), ContainsSubstring("discriminant"));
    config.max_attempts = 20;
    std::ostringstream out2, err2;
    CHECK(cli::cmd_generate(config, out2, err2) == cli::kOk);
}

TEST_CASE("generate reports infeasible datasets", "[commands]") {
    cli::RunConfig config;
    config.shape = Quartic{std::sqrt(2.0) * 1e-2, {4.15, 7.48, 10.71, 13.85}, 0.0, 0};
    config.plan = {PlanKind::Triple, Branch::Plus, {0, 5, 10}};
    config.output_dir = fresh_dir("infeasible");
    std::ostringstream out, err;
    CHECK(cli::cmd_generate(config, out, err) == cli::kFailed);
    CHECK_THAT(err.str(), ContainsSubstring("[adjust]"));
    CHECK_FALSE(fs::exists(config.output_dir / "dataset_0001.csv"));
}

TEST_CASE("retries draw fresh seeds", "[commands]") {
    cli::RunConfig config;
    config.count = 4;
    config.seed = 1;
    CHECK(cli::dataset_seed(config, 0, 0) == 1);
    CHECK(cli::dataset_seed(config, 3, 0) == 4);
    CHECK(cli::dataset_seed(config, 0, 1) == 5);
    CHECK(cli::dataset_seed(config, 2, 2) == 11);
    const ShapeSpec s = cli::with_seed(LinearNoise{1.0, 0}, 77);
    CHECK(std::get<LinearNoise>(s).seed == 77);
    CHECK(std::holds_alternative<OnLine>(cli::with_seed(OnLine{}, 3)));
}

TEST_CASE("quartet command", "[commands]") {
    const fs::path dir = fresh_dir("quartet");
    std::ostringstream out, err;
    REQUIRE(cli::cmd_quartet(dir, out, err) == cli::kOk);
    for (const char* name : {"I", "II", "III", "IV"}) {
        CHECK(fs::exists(dir / ("anscombe_" + std::string(name) + ".csv")));
    }
    const std::string stats = slurp(dir / "quartet_stats.csv");
    CHECK_THAT(stats, ContainsSubstring("I,11,9.000,11.000,7.501,4.127,0.500,3.000,0.667"));
    const std::string moments = slurp(dir / "quartet_moments.csv");
    CHECK_THAT(moments, ContainsSubstring("IV,2.467,7.521,1.121,3.629"));
}

TEST_CASE("verify command", "[commands]") {
    const fs::path dir = fresh_dir("verify");
    std::ostringstream out, err;
    REQUIRE(cli::cmd_quartet(dir, out, err) == cli::kOk);
    std::ostringstream vout, verr;
    CHECK(cli::cmd_verify(dir / "anscombe_I.csv", ConstraintSet::anscombe(), 5e-3,
                          io::ReportFormat::Text, vout, verr) == cli::kOk);
    CHECK_THAT(vout.str(), ContainsSubstring("overall    PASS"));
    std::ostringstream tout, terr;
    CHECK(cli::cmd_verify(dir / "anscombe_I.csv", ConstraintSet::anscombe(), 1e-9,
                          io::ReportFormat::Text, tout, terr) == cli::kFailed);
    CHECK_THAT(terr.str(), ContainsSubstring("violated: mean_y, var_y, beta1"));
    std::ostringstream mout, merr;
    CHECK(cli::cmd_verify(dir / "missing.csv", ConstraintSet::anscombe(), 1e-3,
                          io::ReportFormat::Text, mout, merr) == cli::kUsage);
}

TEST_CASE("plot command", "[commands]") {
    const fs::path dir = fresh_dir("plot");
    std::ostringstream out, err;
    REQUIRE(cli::cmd_quartet(dir, out, err) == cli::kOk);
    const std::vector<fs::path> inputs = {dir / "anscombe_I.csv", dir / "anscombe_IV.csv"};
    CHECK(cli::cmd_plot(inputs, dir / "out.svg", out, err) == cli::kOk);
    CHECK_THAT(slurp(dir / "out.svg"), ContainsSubstring("anscombe_IV"));
    CHECK(cli::cmd_plot(std::vector<fs::path>{dir / "nope.csv"}, dir / "x.svg", out, err) ==
          cli::kFailed);
}

TEST_CASE("output directory from the environment", "[commands]") {
    ::setenv("DEGEN_OUTPUT_DIR", "/tmp/degen_env_dir", 1);
    CHECK(cli::default_output_dir() == fs::path("/tmp/degen_env_dir"));
    ::unsetenv("DEGEN_OUTPUT_DIR");
    CHECK(cli::default_output_dir() == fs::path("."));
}
