#include "config.hpp"

#include <set>

#include "json.hpp"
#include "shp/errors.hpp"

namespace shp::cli {

namespace {

using nlohmann::json;

std::string field(const std::string& src, const std::string& key) {
    return src + ": field '" + key + "'";
}

template <class T>
T get_as(const json& v, const std::string& src, const std::string& key);

template <>
double get_as<double>(const json& v, const std::string& src, const std::string& key) {
    if (!v.is_number()) throw ConfigError(field(src, key) + " must be a number");
    return v.get<double>();
}

template <>
int get_as<int>(const json& v, const std::string& src, const std::string& key) {
    if (!v.is_number_integer()) throw ConfigError(field(src, key) + " must be an integer");
    return v.get<int>();
}

template <>
unsigned get_as<unsigned>(const json& v, const std::string& src, const std::string& key) {
    if (!v.is_number_unsigned()) throw ConfigError(field(src, key) + " must be a non-negative integer");
    return v.get<unsigned>();
}

template <>
bool get_as<bool>(const json& v, const std::string& src, const std::string& key) {
    if (!v.is_boolean()) throw ConfigError(field(src, key) + " must be true or false");
    return v.get<bool>();
}

template <>
std::string get_as<std::string>(const json& v, const std::string& src, const std::string& key) {
    if (!v.is_string()) throw ConfigError(field(src, key) + " must be a string");
    return v.get<std::string>();
}

template <std::size_t N>
std::array<double, N> get_array(const json& v, const std::string& src, const std::string& key) {
    if (!v.is_array() || v.size() != N)
        throw ConfigError(field(src, key) + " must be an array of " + std::to_string(N) + " numbers");
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = get_as<double>(v[i], src, key);
    return out;
}

}  // namespace

RunConfig load_config_json(const std::string& text, const std::string& src) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(src + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError(src + ": top level must be an object");

    RunConfig c;
    for (const auto& [key, v] : j.items()) {
        if (key == "command") c.command = get_as<std::string>(v, src, key);
        else if (key == "units") {
            const auto s = get_as<std::string>(v, src, key);
            if (s == "atomic") c.units = radial::UnitSystem::Mode::Atomic;
            else if (s == "ev") c.units = radial::UnitSystem::Mode::ElectronVolt;
            else throw ConfigError(field(src, key) + " must be \"atomic\" or \"ev\"");
        } else if (key == "format") {
            const auto s = get_as<std::string>(v, src, key);
            if (s == "csv") c.format = Format::Csv;
            else if (s == "json") c.format = Format::Json;
            else throw ConfigError(field(src, key) + " must be \"csv\" or \"json\"");
        } else if (key == "out") c.out = get_as<std::string>(v, src, key);
        else if (key == "tol") c.tol = get_as<double>(v, src, key);
        else if (key == "grid") c.grid = get_as<int>(v, src, key);
        else if (key == "potential") c.potential = get_as<std::string>(v, src, key);
        else if (key == "Z") c.Z = get_as<int>(v, src, key);
        else if (key == "omega") c.omega = get_as<double>(v, src, key);
        else if (key == "table") c.table = get_as<std::string>(v, src, key);
        else if (key == "mass") c.mass = get_as<double>(v, src, key);
        else if (key == "total_mass") c.total_mass = get_as<double>(v, src, key);
        else if (key == "m1") c.m1 = get_as<double>(v, src, key);
        else if (key == "m2") c.m2 = get_as<double>(v, src, key);
        else if (key == "method") c.method = get_as<std::string>(v, src, key);
        else if (key == "N_max") c.N_max = get_as<int>(v, src, key);
        else if (key == "l_max") c.l_max = get_as<int>(v, src, key);
        else if (key == "levels") c.levels = get_as<int>(v, src, key);
        else if (key == "n_a") c.n_a = get_as<int>(v, src, key);
        else if (key == "l") c.l = get_as<int>(v, src, key);
        else if (key == "n") c.n = get_as<int>(v, src, key);
        else if (key == "k") c.k = get_as<int>(v, src, key);
        else if (key == "eps") c.eps = get_as<double>(v, src, key);
        else if (key == "conjugated") c.conjugated = get_as<bool>(v, src, key);
        else if (key == "suite") c.suite = get_as<std::string>(v, src, key);
        else if (key == "seed") c.seed = get_as<unsigned>(v, src, key);
        else if (key == "orbit") c.orbit = get_as<std::string>(v, src, key);
        else if (key == "boost") c.boost = get_array<3>(v, src, key);
        else if (key == "rotate") c.rotate = get_array<4>(v, src, key);
        else if (key == "random_lambda") c.random_lambda = get_as<bool>(v, src, key);
        else if (key == "no_family") c.no_family = get_as<bool>(v, src, key);
        else if (key == "interpolate") c.interpolate = get_as<bool>(v, src, key);
        else throw ConfigError(src + ": unknown field '" + key + "'");
    }
    return c;
}

void validate(const RunConfig& c) {
    static const std::set<std::string> commands = {"spectrum", "wavefn", "verify", "orbit",
                                                   "constants"};
    static const std::set<std::string> potentials = {"coulomb", "oscillator", "tabulated",
                                                     "positronium"};
    static const std::set<std::string> suites = {"angular", "ladder", "casimir",
                                                 "radial",  "induced", "all"};
    if (!commands.count(c.command)) throw ConfigError("command: unknown command '" + c.command + "'");
    if (c.tol && !(*c.tol > 0.0)) throw ConfigError("tol: must be > 0");
    if (c.grid && *c.grid < 4) throw ConfigError("grid: must be >= 4");
    if (!potentials.count(c.potential))
        throw ConfigError("potential: must be coulomb, oscillator, tabulated or positronium");
    if (c.Z < 1) throw ConfigError("Z: must be >= 1");
    if (!(c.omega > 0.0)) throw ConfigError("omega: must be > 0");
    if (c.potential == "tabulated" && c.table.empty() &&
        (c.command == "spectrum" || c.command == "wavefn"))
        throw ConfigError("table: a tabulated potential needs --table PATH");
    for (const auto& [name, v] : {std::pair{"mass", c.mass}, std::pair{"total_mass", c.total_mass},
                                  std::pair{"m1", c.m1}, std::pair{"m2", c.m2}})
        if (v && !(*v > 0.0)) throw ConfigError(std::string(name) + ": must be > 0");
    if (c.m1.has_value() != c.m2.has_value()) throw ConfigError("m1, m2: give both or neither");
    if (c.method != "numeric" && c.method != "analytic")
        throw ConfigError("method: must be numeric or analytic");
    if (c.N_max < 1) throw ConfigError("N_max: range is empty, need N_max >= 1");
    if (c.l_max && *c.l_max < 0) throw ConfigError("l_max: range is empty, need l_max >= 0");
    if (c.levels < 1) throw ConfigError("levels: range is empty, need levels >= 1");
    if (c.n_a < 0) throw ConfigError("n_a: must be >= 0");
    if (c.l && *c.l < 0) throw ConfigError("l: must be >= 0");
    if (c.n && *c.n < 0) throw ConfigError("n: must be >= 0");
    if (c.k < 0) throw ConfigError("k: must be >= 0");
    if (!(c.eps > 0.0)) throw ConfigError("eps: must be > 0");
    if (!suites.count(c.suite))
        throw ConfigError("suite: unknown suite '" + c.suite +
                          "' (angular, ladder, casimir, radial, induced, all)");
    if (c.rotate[0] == 0.0 && c.rotate[1] == 0.0 && c.rotate[2] == 0.0)
        throw ConfigError("rotate: axis must be nonzero");
}

Format resolve_format(const RunConfig& c) {
    if (c.format) return *c.format;
    return c.command == "verify" ? Format::Json : Format::Csv;
}

radial::UnitSystem resolve_units(const RunConfig& c) {
    auto mode = c.units.value_or(c.potential == "positronium" ? radial::UnitSystem::Mode::ElectronVolt
                                                               : radial::UnitSystem::Mode::Atomic);
    return mode == radial::UnitSystem::Mode::Atomic ? radial::UnitSystem::atomic()
                                                    : radial::UnitSystem::electron_volt();
}

Masses resolve_masses(const RunConfig& c) {
    if (c.m1 && c.m2) return {*c.m1 * *c.m2 / (*c.m1 + *c.m2), *c.m1 + *c.m2};
    if (c.potential == "positronium" && !c.mass && !c.total_mass) return {0.5, 2.0};
    Masses m;
    m.reduced = c.mass.value_or(1.0);
    m.total = c.total_mass.value_or(4.0 * m.reduced);
    if (m.total < 4.0 * m.reduced * (1.0 - 1e-12))
        throw ConfigError("total_mass: must be at least 4 * mass for two positive constituents");
    return m;
}

}  // namespace shp::cli
