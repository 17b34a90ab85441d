#pragma once

#include <stdexcept>
#include <string>

namespace dt4 {

// Base class of everything thrown by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operational errors: bad input, bad configuration, resource caps.
struct ParseError : Error {
    using Error::Error;
};
struct ResourceLimitError : Error {
    using Error::Error;
};
struct BadChartError : Error {
    using Error::Error;
};

// Mathematical errors.
struct ZeroWeightError : Error {
    using Error::Error;
};
struct UnpairableError : Error {
    using Error::Error;
};
struct PoleHitError : Error {
    using Error::Error;
};
struct PoleAtSpecializationError : Error {
    using Error::Error;
};
struct ZeroAtSpecializationError : Error {
    using Error::Error;
};
struct NotConstantError : Error {
    using Error::Error;
};
struct BadConstantTermError : Error {
    using Error::Error;
};
struct WrongShapeError : Error {
    using Error::Error;
};

}  // namespace dt4
