#pragma once

#include <stdexcept>
#include <string>

namespace shp {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SHP_DECLARE_ERROR(Name)                      \
    class Name : public Error {                      \
    public:                                          \
        explicit Name(const std::string& what_arg)   \
            : Error(#Name ": " + what_arg) {}        \
    }

SHP_DECLARE_ERROR(DomainError);
SHP_DECLARE_ERROR(IndexError);
SHP_DECLARE_ERROR(PoleError);
SHP_DECLARE_ERROR(NotInRMS);
SHP_DECLARE_ERROR(GridTooCoarse);
SHP_DECLARE_ERROR(GridMismatch);
SHP_DECLARE_ERROR(ConvergenceError);
SHP_DECLARE_ERROR(ImaginaryMass);
SHP_DECLARE_ERROR(DivergenceWarning);
SHP_DECLARE_ERROR(ChartSingular);
SHP_DECLARE_ERROR(OrbitCoverage);
SHP_DECLARE_ERROR(ConfigError);

#undef SHP_DECLARE_ERROR

}  // namespace shp
