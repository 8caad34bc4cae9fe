#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "shp/radial.hpp"

namespace shp::io {

// Shortest decimal that round-trips, '.' separator, independent of locale.
std::string format_double(double x);

// "key=value" metadata line: "# key=value\n".
void write_meta(std::ostream& out, std::string_view key, std::string_view value);

// Two-column "rho,V" table. Blank lines and '#' lines are skipped, one header row
// of non-numeric text is allowed. ConfigError names the offending line.
radial::Tabulated read_tabulated_csv(std::istream& in, const std::string& source_name = "<stream>");
radial::Tabulated read_tabulated_csv_file(const std::string& path);

std::string read_text_file(const std::string& path);
// Writes to path, or to stdout when path is empty or "-".
void write_text_file(const std::string& path, const std::string& text);

}  // namespace shp::io
