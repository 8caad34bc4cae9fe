#pragma once

#include <optional>
#include <string>
#include <vector>

namespace shp::cli {

struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyParams {
    int angular_nodes = 128;
    std::optional<double> tolerance;  // replaces every check's tolerance when set
    unsigned seed = 20240611;
};

// Suites: angular, ladder, casimir, radial, induced, all. ConfigError on an unknown name.
std::vector<Check> run_suite(const std::string& suite, const VerifyParams& params = {});

}  // namespace shp::cli
