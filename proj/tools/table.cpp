#include "table.hpp"

#include <sstream>

#include "json.hpp"
#include "shp/io.hpp"

namespace shp::cli {

namespace {

std::string csv_cell(const Cell& c) {
    struct V {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(double v) const { return io::format_double(v); }
        std::string operator()(const std::string& s) const {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(V{}, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
    struct V {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(long long v) const { return v; }
        nlohmann::ordered_json operator()(double v) const {
            if (!std::isfinite(v)) return io::format_double(v);
            return v;
        }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
        nlohmann::ordered_json operator()(bool b) const { return b; }
    };
    return std::visit(V{}, c);
}

}  // namespace

std::string Table::render(Format format) const {
    std::ostringstream out;
    if (format == Format::Csv) {
        io::write_meta(out, "schema", schema);
        for (const auto& [k, v] : meta) io::write_meta(out, k, v);
        for (const auto& [name, unit] : columns)
            if (!unit.empty()) io::write_meta(out, "unit." + name, unit);
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << columns[i].first;
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
            out << '\n';
        }
        return out.str();
    }

    nlohmann::ordered_json j;
    j["schema"] = schema;
    auto& m = j["meta"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    auto& u = j["units"] = nlohmann::ordered_json::object();
    for (const auto& [name, unit] : columns)
        if (!unit.empty()) u[name] = unit;
    auto& rs = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i)
            r[columns[i].first] = json_cell(row[i]);
        rs.push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

}  // namespace shp::cli
