#include "shp/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shp/errors.hpp"

namespace shp::io {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buf.data(), ptr);
}

void write_meta(std::ostream& out, std::string_view key, std::string_view value) {
    out << "# " << key << '=' << value << '\n';
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool parse_number(std::string_view s, double& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

radial::Tabulated read_tabulated_csv(std::istream& in, const std::string& source_name) {
    radial::Tabulated t;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        const auto comma = s.find(',');
        const auto where = source_name + ":" + std::to_string(lineno);
        if (comma == std::string_view::npos)
            throw ConfigError(where + ": expected two comma-separated columns");
        const auto a = s.substr(0, comma);
        const auto b = s.substr(comma + 1);
        if (b.find(',') != std::string_view::npos)
            throw ConfigError(where + ": expected exactly two columns");
        double rho = 0.0, v = 0.0;
        const bool ok_a = parse_number(a, rho);
        const bool ok_b = parse_number(b, v);
        if (!ok_a || !ok_b) {
            if (!header_seen && t.rho.empty() && !ok_a && !ok_b) {
                header_seen = true;
                continue;
            }
            throw ConfigError(where + ": could not parse '" + std::string(ok_a ? b : a) +
                              "' as a number");
        }
        if (!t.rho.empty() && !(rho > t.rho.back()))
            throw ConfigError(where + ": rho must be strictly increasing");
        t.rho.push_back(rho);
        t.V.push_back(v);
    }
    if (t.rho.size() < 3) throw ConfigError(source_name + ": need at least three data rows");
    return t;
}

radial::Tabulated read_tabulated_csv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open " + path);
    return read_tabulated_csv(f, path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path);
    f << text;
    if (!f) throw ConfigError("write failed for " + path);
}

}  // namespace shp::io
