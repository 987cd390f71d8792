#include "degen/xgen.hpp"

#include "oracle.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace degen;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("uniform grid for the quartet statistics is 4..14", "[xgen]") {
    const auto xs = xgen::uniform_x({11, 9.0, 11.0, XFamily::Uniform});
    REQUIRE(xs.size() == 11);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        CHECK_THAT(xs[k], WithinAbs(4.0 + static_cast<double>(k), 1e-13));
    }
    CHECK_THAT(xgen::uniform_spacing(11, 11.0), WithinAbs(1.0, 1e-15));
}

TEST_CASE("uniform grid with even n", "[xgen]") {
    const auto xs = xgen::uniform_x({4, 0.0, 1.0, XFamily::Uniform});
    REQUIRE(xs.size() == 4);
    CHECK_THAT(xgen::uniform_spacing(4, 1.0), WithinAbs(0.7745966692414834, 1e-15));
    CHECK_THAT(xs[0], WithinAbs(-1.161895003862225, 1e-14));
    CHECK_THAT(xs[1], WithinAbs(-0.3872983346207417, 1e-14));
    CHECK_THAT(xs[2], WithinAbs(0.3872983346207417, 1e-14));
    CHECK_THAT(xs[3], WithinAbs(1.161895003862225, 1e-14));
}

TEST_CASE("three-point grid", "[xgen]") {
    const auto xs = xgen::uniform_x({3, 9.0, 11.0, XFamily::Uniform});
    CHECK_THAT(xs[0], WithinAbs(5.6833752096446, 1e-12));
    CHECK_THAT(xs[1], WithinAbs(9.0, 1e-14));
    CHECK_THAT(xs[2], WithinAbs(12.3166247903554, 1e-12));
}

TEST_CASE("bimodal grids", "[xgen]") {
    SECTION("plus") {
        const auto xs = xgen::bimodal_x({11, 9.0, 11.0, XFamily::BimodalPlus});
        REQUIRE(xs.size() == 11);
        for (std::size_t k = 0; k < 10; ++k) CHECK_THAT(xs[k], WithinAbs(8.0, 1e-13));
        CHECK_THAT(xs[10], WithinAbs(19.0, 1e-13));
    }
    SECTION("minus") {
        const auto xs = xgen::bimodal_x({11, 9.0, 11.0, XFamily::BimodalMinus});
        for (std::size_t k = 0; k < 10; ++k) CHECK_THAT(xs[k], WithinAbs(10.0, 1e-13));
        CHECK_THAT(xs[10], WithinAbs(-1.0, 1e-13));
    }
    SECTION("two distinct values") {
        const auto xs = xgen::make_x({7, -3.0, 2.5, XFamily::BimodalPlus});
        CHECK(std::set<double>(xs.begin(), xs.end()).size() == 2);
    }
}

TEST_CASE("grids hit the target mean and variance", "[xgen][property]") {
    for (auto family : {XFamily::Uniform, XFamily::BimodalPlus, XFamily::BimodalMinus}) {
        for (std::size_t n = 3; n <= 200; ++n) {
            const double mean = -50.0 + 0.37 * static_cast<double>(n);
            const double var = 0.01 + 0.5 * static_cast<double>(n);
            const auto xs = xgen::make_x({n, mean, var, family});
            REQUIRE(xs.size() == n);
            const auto s = oracle::brute_stats(xs, xs);
            CHECK_THAT(static_cast<double>(s.mean_x), WithinAbs(mean, 1e-10));
            CHECK_THAT(static_cast<double>(s.var_x), WithinRel(var, 1e-10));
            if (family == XFamily::Uniform) {
                CHECK(std::is_sorted(xs.begin(), xs.end()));
            }
        }
    }
}

TEST_CASE("invalid grid specs", "[xgen]") {
    CHECK_THROWS_AS(xgen::make_x({2, 0.0, 1.0, XFamily::Uniform}), std::invalid_argument);
    CHECK_THROWS_AS(xgen::make_x({5, 0.0, 0.0, XFamily::Uniform}), std::invalid_argument);
    CHECK_THROWS_AS(xgen::make_x({5, 0.0, -1.0, XFamily::BimodalPlus}), std::invalid_argument);
}

TEST_CASE("custom grids", "[xgen]") {
    const std::vector<double> in = {3.0, 1.0, 2.0, 2.0};
    const auto xs = xgen::custom_x(in);
    CHECK(xs == std::vector<double>{1.0, 2.0, 2.0, 3.0});
    CHECK_THROWS_WITH(xgen::custom_x(std::vector<double>{4.0, 4.0, 4.0}),
                      "all x identical; no regression possible");
    CHECK_THROWS_AS(xgen::custom_x(std::vector<double>{1.0, 2.0}), std::invalid_argument);
}
