#include "degen/anscombe.hpp"
#include "degen/dataset_io.hpp"
#include "degen/plot.hpp"
#include "degen/report_io.hpp"

#include "oracle.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <regex>

using namespace degen;
using Catch::Matchers::ContainsSubstring;

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "degen_test_io";
    fs::create_directories(dir);
    return dir / name;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("quartet csv text", "[io][anscombe]") {
    const std::string csv = anscombe::csv(0);
    CHECK(csv.rfind("x,y\n10.0,8.04\n8.0,6.95\n", 0) == 0);
    CHECK_THAT(anscombe::csv(3), ContainsSubstring("19.0,12.50"));
    CHECK_THROWS_AS(anscombe::csv(4), std::out_of_range);
    for (std::size_t i = 0; i < anscombe::kCount; ++i) {
        CHECK(io::parse_csv(anscombe::csv(i)) == anscombe::dataset(i));
    }
}

TEST_CASE("csv round trip", "[io]") {
    const DatasetPair d({1.0 / 3.0, 2.5, -1e-7}, {1e10, -0.125, 7.0});
    const DatasetPair back = io::parse_csv(io::to_csv(d));
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(back.xs()[k] == Catch::Approx(d.xs()[k]).epsilon(1e-11));
        CHECK(back.ys()[k] == Catch::Approx(d.ys()[k]).epsilon(1e-11));
    }

    const fs::path path = scratch("nested/dir/roundtrip.csv");
    fs::remove_all(path.parent_path());
    io::write_text(path, io::to_csv(d));
    CHECK(io::read_csv(path).size() == 3);
}

TEST_CASE("csv parsing tolerates comments and blank lines", "[io]") {
    const DatasetPair d = io::parse_csv("# generated\n\n1,2\n 3 , 4 \n\n5,6\n");
    CHECK(oracle::vec(d.xs()) == std::vector<double>{1, 3, 5});
    CHECK(oracle::vec(d.ys()) == std::vector<double>{2, 4, 6});
}

TEST_CASE("csv parse errors name the line", "[io]") {
    try {
        (void)io::parse_csv("x,y\n1,2\n3,four\n5,6\n", "bad.csv");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 3);
        CHECK_THAT(e.what(), ContainsSubstring("bad.csv"));
    }
    CHECK_THROWS_AS(io::parse_csv("1,2,3\n4,5,6\n7,8,9\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_csv("1,2\n3,4\n"), io::ParseError);
    CHECK_THROWS_AS(io::read_csv(scratch("does_not_exist.csv")), std::runtime_error);
}

TEST_CASE("text report", "[io][report]") {
    const auto r = verify::verify(anscombe::dataset(0), ConstraintSet::anscombe(), 1e-9);
    const std::string text = io::report_text(r);
    CHECK_THAT(text, ContainsSubstring("overall    FAIL"));
    CHECK_THAT(text, ContainsSubstring("mean_x"));
    CHECK(count(text, "FAIL") == 4);
    CHECK_THAT(text, ContainsSubstring("kurt_y"));
}

TEST_CASE("json report", "[io][report]") {
    const auto r = verify::verify(anscombe::dataset(1), ConstraintSet::anscombe(), 5e-3);
    const auto doc = nlohmann::json::parse(io::report_json(r));
    CHECK(doc["passed"] == true);
    CHECK(doc["constraints"].size() == 6);
    CHECK(doc["constraints"]["n"]["measured"] == 11.0);
    CHECK(doc["constraints"]["beta1"]["passed"] == true);
    CHECK(doc["moments"]["skew_y"].get<double>() == Catch::Approx(-0.9786929444133758));
    CHECK(io::format_report(r, io::ReportFormat::Json) == io::report_json(r));
    CHECK(io::format_report(r, io::ReportFormat::Text) == io::report_text(r));
}

TEST_CASE("svg plot", "[io][plot]") {
    std::vector<plot::Panel> panels;
    for (std::size_t i = 0; i < anscombe::kCount; ++i) {
        panels.push_back({std::string(anscombe::kNames[i]), anscombe::dataset(i)});
    }
    const std::string svg = plot::render_svg(panels);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(count(svg, "class=\"panel\"") == 4);
    CHECK(count(svg, "class=\"point\"") == 44);
    CHECK(count(svg, "class=\"regression\"") == 4);
    CHECK(svg == plot::render_svg(panels));

    // The overlaid line for dataset I follows its fit: y ≈ 3 + 0.5 x.
    const std::regex line_re(R"re(data-x1="([^"]+)" data-y1="([^"]+)" data-x2="([^"]+)" data-y2="([^"]+)")re");
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, line_re));
    const double x1 = std::stod(m[1]), y1 = std::stod(m[2]);
    const double x2 = std::stod(m[3]), y2 = std::stod(m[4]);
    CHECK((y2 - y1) / (x2 - x1) == Catch::Approx(0.5001).margin(1e-3));
    CHECK(y1 == Catch::Approx(3.0 + 0.5 * x1).margin(0.01));

    CHECK_THROWS_AS(plot::render_svg({}), std::invalid_argument);
}
