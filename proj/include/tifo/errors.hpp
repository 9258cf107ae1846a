#pragma once

#include <stdexcept>
#include <string>

namespace tifo {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data; message carries row/field context.
struct ParseError : Error {
    using Error::Error;
};

// A statistic was requested on a sequence with too few events.
struct InsufficientEventsError : Error {
    using Error::Error;
};

// A sequence whose values make the requested formula ill-posed
// (e.g. the finite-size burstiness denominator vanishing).
struct DegenerateSequenceError : Error {
    using Error::Error;
};

}  // namespace tifo
