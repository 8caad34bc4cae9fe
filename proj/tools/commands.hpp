#pragma once

#include <string>

#include "config.hpp"

namespace shp::cli {

struct CommandResult {
    std::string text;
    int exit_code = 0;  // 1 when a reported check fails
};

CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_wavefn(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_orbit(const RunConfig& cfg);
CommandResult cmd_constants(const RunConfig& cfg);

CommandResult dispatch(const RunConfig& cfg);

}  // namespace shp::cli
