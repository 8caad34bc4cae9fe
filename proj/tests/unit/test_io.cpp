#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "shp/errors.hpp"
#include "shp/io.hpp"

using namespace shp::io;

TEST_CASE("doubles print shortest and round-trip") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-2.0) == "-2");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    for (double x : {1.0 / 3.0, -6.802846561504742, 2.2641299624674808e-05, 1e300, 5e-324}) {
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
        CHECK(format_double(x).find(',') == std::string::npos);
    }
}

TEST_CASE("metadata lines") {
    std::ostringstream os;
    write_meta(os, "units", "atomic");
    CHECK(os.str() == "# units=atomic\n");
}

TEST_CASE("tabulated potentials") {
    std::istringstream ok("# comment\nrho,V\n\n0.1,-10\n0.5,-2\n1.0,-1\n2.0,-0.5\n");
    const auto t = read_tabulated_csv(ok, "pot.csv");
    CHECK(t.rho.size() == 4);
    CHECK(t.V[1] == -2.0);

    auto error_of = [](const std::string& text) {
        std::istringstream is(text);
        try {
            read_tabulated_csv(is, "pot.csv");
        } catch (const shp::ConfigError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(error_of("0.1,1\n0.2,x\n0.3,1\n").find("pot.csv:2") != std::string::npos);
    CHECK(error_of("0.1,1\n0.2\n0.3,1\n").find("pot.csv:2") != std::string::npos);
    CHECK(error_of("0.1,1\n0.3,1\n0.2,1\n").find("pot.csv:3") != std::string::npos);
    CHECK_FALSE(error_of("0.1,1\n0.2,1\n").empty());
    CHECK_FALSE(error_of("rho,V\nr,v\n0.1,1\n0.2,1\n0.3,1\n").empty());
    CHECK_THROWS_AS(read_tabulated_csv_file("/nonexistent/pot.csv"), shp::ConfigError);
}
