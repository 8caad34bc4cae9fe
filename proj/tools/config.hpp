#pragma once

#include <array>
#include <optional>
#include <string>

#include "shp/radial.hpp"

namespace shp::cli {

enum class Format { Csv, Json };

// Everything a command needs. Unset optionals are resolved per command.
struct RunConfig {
    std::string command;

    std::optional<radial::UnitSystem::Mode> units;
    std::optional<Format> format;
    std::string out;  // empty writes to stdout
    std::optional<double> tol;
    std::optional<int> grid;

    // potential and masses
    std::string potential = "coulomb";  // coulomb | oscillator | tabulated | positronium
    int Z = 1;
    double omega = 1.0;
    std::string table;
    std::optional<double> mass;        // reduced mass, in electron masses
    std::optional<double> total_mass;  // in electron masses
    std::optional<double> m1;
    std::optional<double> m2;

    // spectrum
    std::string method = "numeric";  // numeric | analytic
    int N_max = 3;
    std::optional<int> l_max;
    int levels = 3;  // radial levels per l for oscillator and tabulated

    // wavefn and orbit states
    int n_a = 0;
    std::optional<int> l;
    std::optional<int> n;
    int k = 0;
    double eps = 0.1;
    bool conjugated = false;

    // verify
    std::string suite = "all";
    unsigned seed = 20240611;

    // orbit
    std::string orbit;
    std::array<double, 3> boost{0.0, 0.0, 0.0};
    std::array<double, 4> rotate{0.0, 0.0, 1.0, 0.0};  // axis x, y, z, angle
    bool random_lambda = false;
    bool no_family = false;
    bool interpolate = false;
};

// Fields of a JSON config object; names match the long flags with '-' as '_'.
// ConfigError carries the JSON line/column or the field name.
RunConfig load_config_json(const std::string& text, const std::string& source_name);

// Throws ConfigError naming the first invalid field.
void validate(const RunConfig& cfg);

Format resolve_format(const RunConfig& cfg);
radial::UnitSystem resolve_units(const RunConfig& cfg);

struct Masses {
    double reduced = 1.0;  // electron masses
    double total = 4.0;
};

// m1, m2 when both are given; otherwise mass (default 1) and total_mass (default
// 4 * mass, an equal-mass pair). The positronium preset uses m1 = m2 = 1.
Masses resolve_masses(const RunConfig& cfg);

}  // namespace shp::cli
