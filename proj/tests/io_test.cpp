#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qkr/io.hpp"

using namespace qkr;

TEST_CASE("format_double renders 17 significant digits deterministically") {
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(std::numbers::pi) == "3.1415926535897931");
    CHECK(format_double(-110.31211164260775) == "-110.31211164260775");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1e-300) == "1e-300");
}

TEST_CASE("parse_angle accepts pi multiples and raw radians") {
    CHECK(parse_angle("0.5pi") == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(parse_angle("-0.25pi") == doctest::Approx(-std::numbers::pi / 4).epsilon(1e-15));
    CHECK(parse_angle("pi") == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK(parse_angle("-pi") == doctest::Approx(-std::numbers::pi).epsilon(1e-15));
    CHECK(parse_angle("1.2") == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(parse_angle("0") == 0.0);
    CHECK_THROWS_AS(parse_angle("halfpi"), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle("1.2.3"), std::invalid_argument);
}

TEST_CASE("parse_rational validates lowest terms and positivity") {
    CHECK(parse_rational("1/3") == std::pair{1, 3});
    CHECK(parse_rational("1") == std::pair{1, 1});
    CHECK(parse_rational("3/4") == std::pair{3, 4});
    CHECK_THROWS_WITH_AS(parse_rational("2/4"), "pq: p/q not in lowest terms",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("-1/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("0/1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
}

TEST_CASE("parse_double_list splits on commas") {
    CHECK(parse_double_list("1,10,100") == std::vector<double>{1.0, 10.0, 100.0});
    CHECK(parse_double_list("0.5") == std::vector<double>{0.5});
    CHECK_THROWS_AS(parse_double_list("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_double_list(""), std::invalid_argument);
}

TEST_CASE("moments CSV layout: provenance block, header, fixed formatting") {
    MomentSeries series;
    series.entries.push_back({0, 0.0, 1.0, 1.0, 1.0, 0.0});
    series.entries.push_back({10, -0.5, 2.25, 2.0, 0.9999999999999999, 1e-15});

    const auto path = std::filesystem::temp_directory_path() / "qkr_io_test_moments.csv";
    write_moments_csv(path.string(), series, {{"kappa", "0.25"}, {"pq", "1/1"}});

    std::ifstream in(path, std::ios::binary);
    std::stringstream got;
    got << in.rdbuf();
    const std::string expected =
        "# kappa: 0.25\n"
        "# pq: 1/1\n"
        "n,m1,m2,variance,norm,tail_mass\n"
        "0,0,1,1,1,0\n"
        "10,-0.5,2.25,2,0.99999999999999989,1.0000000000000001e-15\n";
    CHECK(got.str() == expected);
    std::filesystem::remove(path);
}

TEST_CASE("sweep CSV uses the swept variable as its first column") {
    std::vector<SweepRecord> records(1);
    records[0].variable = "kappa";
    records[0].value = 0.25;
    records[0].fit.slope = -0.2;
    records[0].fit.stderr_slope = 1e-9;
    records[0].fit.residual_rms = 1e-8;
    records[0].fit.n_min = 120;
    records[0].fit.n_max = 600;

    const auto path = std::filesystem::temp_directory_path() / "qkr_io_test_sweep.csv";
    write_sweep_csv(path.string(), records, {});
    std::ifstream in(path, std::ios::binary);
    std::stringstream got;
    got << in.rdbuf();
    CHECK(got.str() ==
          "kappa,vg,stderr,residual_rms,n_min,n_max\n"
          "0.25,-0.20000000000000001,1.0000000000000001e-09,1e-08,120,600\n");
    std::filesystem::remove(path);
}
