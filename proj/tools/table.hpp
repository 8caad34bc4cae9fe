#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "config.hpp"

namespace shp::cli {

using Cell = std::variant<std::monostate, long long, double, std::string, bool>;

// Rows plus '#' metadata. Every numeric column carries a unit tag ("1" when dimensionless).
struct Table {
    std::string schema;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::pair<std::string, std::string>> columns;  // name, unit
    std::vector<std::vector<Cell>> rows;

    void add_meta(std::string key, std::string value) {
        meta.emplace_back(std::move(key), std::move(value));
    }
    void add_column(std::string name, std::string unit = "") {
        columns.emplace_back(std::move(name), std::move(unit));
    }
    std::string render(Format format) const;
};

}  // namespace shp::cli
