#pragma once

#include <stdexcept>
#include <string>

namespace jordalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvertOfZero : Error { using Error::Error; };
struct WindowUnderflow : Error { using Error::Error; };
struct IncompatibleRoot : Error { using Error::Error; };
struct PoleAtOne : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotNilpotentError : Error { using Error::Error; };
struct NotUnipotent : Error { using Error::Error; };
struct UnassignedSymbol : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace jordalg
