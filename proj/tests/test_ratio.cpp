#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "coref/ratio.hpp"

using coref::Ratio;

TEST_CASE("ratios normalize on construction") {
    CHECK(Ratio(6, 7) == Ratio(6, 7));
    CHECK(Ratio(2446, 4846) == Ratio(1223, 2423));
    CHECK(Ratio(4, 8).num() == 1);
    CHECK(Ratio(4, 8).den() == 2);
    CHECK(Ratio(0, 5) == Ratio(0, 3));
    CHECK(Ratio(-2, 4) == Ratio(1, -2));
    CHECK(Ratio(-2, -4) == Ratio(1, 2));
}

TEST_CASE("degenerate ratio is 0/0 and only 0/0") {
    const Ratio d = Ratio::degenerate();
    CHECK(d.is_degenerate());
    CHECK(Ratio(0, 0).is_degenerate());
    CHECK(d == Ratio(0, 0));
    CHECK(d != Ratio(0, 1));
    CHECK_THROWS_AS(Ratio(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(d.to_double(), std::domain_error);
    CHECK_THROWS_AS(d + Ratio(1, 2), std::domain_error);
    CHECK_THROWS_AS(d.to_decimal_string(2), std::domain_error);
}

TEST_CASE("exact arithmetic") {
    CHECK(Ratio(1, 2) + Ratio(1, 3) == Ratio(5, 6));
    CHECK(Ratio(1, 2) - Ratio(1, 3) == Ratio(1, 6));
    CHECK(Ratio(2, 3) * Ratio(3, 4) == Ratio(1, 2));
    CHECK(Ratio(2, 3) / Ratio(4, 9) == Ratio(3, 2));
    CHECK(-Ratio(1, 2) == Ratio(-1, 2));
    CHECK(Ratio(1, 1) - Ratio(29, 50) == Ratio(21, 50));
    CHECK_THROWS_AS(Ratio(1, 2) / Ratio(0, 1), std::domain_error);
}

TEST_CASE("comparisons cross-multiply exactly") {
    CHECK(Ratio(1, 3) < Ratio(1, 2));
    CHECK(Ratio(-1, 2) < Ratio(0, 1));
    CHECK(Ratio(6, 7) > Ratio(5, 6));
    CHECK(Ratio(2, 4) <= Ratio(1, 2));
    CHECK(Ratio(2, 4) >= Ratio(1, 2));
}

TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(Ratio(6, 7).to_decimal_string(3) == "0.857");
    CHECK(Ratio(6, 7).to_decimal_string(2) == "0.86");
    CHECK(Ratio(11, 21).to_decimal_string(2) == "0.52");
    CHECK(Ratio(1, 8).to_decimal_string(2) == "0.13");   // 0.125 rounds up
    CHECK(Ratio(-1, 8).to_decimal_string(2) == "-0.13"); // and away from zero
    CHECK(Ratio(1, 2).to_decimal_string(0) == "1");
    CHECK(Ratio(1, 1).to_decimal_string(3) == "1.000");
    CHECK(Ratio(0, 1).to_decimal_string(2) == "0.00");
    CHECK(Ratio(5154, 10000).to_decimal_string(4) == "0.5154");
    CHECK(Ratio(7057, 10929).to_decimal_string(2) == "0.65");
}

TEST_CASE("overflow in intermediate products is detected") {
    const long long big = 2'000'000'000'000'000'000LL;  // ~2e18
    const Ratio nearly_max(big, 1);
    CHECK_THROWS_AS(nearly_max * nearly_max, std::overflow_error);
}
