#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "pskrx/sweep.hpp"

using namespace pskrx;

TEST_CASE("grid parsing") {
    CHECK(parse_grid("0.5") == std::vector<double>{0.5});

    const auto grid = parse_grid("0:1.5:0.1");
    REQUIRE(grid.size() == 16);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == doctest::Approx(1.5).epsilon(1e-12));

    const auto coarse = parse_grid("0.1:0.5:0.2");
    REQUIRE(coarse.size() == 3);
    CHECK(coarse[1] == doctest::Approx(0.3).epsilon(1e-12));

    // Stop that is not on the step lattice is simply not emitted.
    CHECK(parse_grid("0:1:0.4").size() == 3);

    CHECK_THROWS_AS(parse_grid(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1:0.1:9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1:-0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("1:0:0.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("a:b:c"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0.5x"), std::invalid_argument);
}

TEST_CASE("csv writer formats rows with 12 significant digits") {
    SweepResult exact;
    exact.m = 4;
    exact.alpha = 0.5;
    exact.n_modes = 2;
    exact.method = "analytic";
    exact.success = 0.480541185812382872;
    exact.error_rate = 1.0 - exact.success;

    SweepResult sampled = exact;
    sampled.method = "mc-optimal";
    sampled.std_dev = 0.00123456789012345;

    std::ostringstream out;
    write_csv(out, {exact, sampled});
    const std::string text = out.str();

    CHECK(text == "m,alpha,mean_photons,n_modes,method,success,error_rate,std_dev\n"
                  "4,0.5,0.25,2,analytic,0.480541185812,0.519458814188,\n"
                  "4,0.5,0.25,2,mc-optimal,0.480541185812,0.519458814188,0.00123456789012\n");
}

TEST_CASE("csv writer handles empty row sets and integral values") {
    std::ostringstream out;
    write_csv(out, {});
    CHECK(out.str() == std::string(kCsvHeader) + "\n");

    SweepResult row;
    row.m = 8;
    row.alpha = 2.0;
    row.n_modes = 1;
    row.method = "helstrom";
    row.success = 1.0;
    row.error_rate = 0.0;
    std::ostringstream single;
    write_csv(single, {row});
    CHECK(single.str() == std::string(kCsvHeader) + "\n8,2,4,1,helstrom,1,0,\n");
}
