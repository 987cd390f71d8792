#include "degen/roots.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace degen::roots;
using Catch::Matchers::WithinAbs;

TEST_CASE("scan finds every sign change", "[roots]") {
    const auto f = [](double x) { return (x - 1.0) * (x + 2.0) * (x - 3.5); };
    const auto brackets = scan_sign_changes(f, -5.0, 5.0, 200);
    REQUIRE(brackets.size() == 3);
    CHECK(brackets[0].lo <= -2.0);
    CHECK(brackets[0].hi >= -2.0);
    CHECK(brackets[2].lo <= 3.5);
    CHECK(brackets[2].hi >= 3.5);
}

TEST_CASE("scan skips poles", "[roots]") {
    const auto f = [](double x) { return 1.0 / x; };
    CHECK(scan_sign_changes(f, -1.0, 1.0, 201).empty());
}

TEST_CASE("bisect_secant converges", "[roots]") {
    const auto f = [](double x) { return std::cos(x) - x; };
    const RootResult r = bisect_secant(f, {0.0, 1.0});
    CHECK_THAT(r.x, WithinAbs(0.7390851332151607, 1e-12));
    CHECK(std::fabs(r.fx) < 1e-10);
    CHECK(r.iterations > 0);
}

TEST_CASE("bisect_secant on a steep function", "[roots]") {
    const auto f = [](double x) { return std::exp(20.0 * x) - 2.0; };
    const RootResult r = bisect_secant(f, {-1.0, 1.0});
    CHECK_THAT(r.x, WithinAbs(std::log(2.0) / 20.0, 1e-12));
}

TEST_CASE("bisect_secant rejects a bracket without a sign change", "[roots]") {
    const auto f = [](double x) { return x * x + 1.0; };
    CHECK_THROWS_AS(bisect_secant(f, {-1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("endpoint roots", "[roots]") {
    const auto f = [](double x) { return x - 2.0; };
    CHECK_THAT(bisect_secant(f, {2.0, 3.0}).x, WithinAbs(2.0, 1e-12));
}
