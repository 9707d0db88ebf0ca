#pragma once

#include <stdexcept>
#include <string>

namespace latmon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSymmetric : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct EmptyInput : Error {
    using Error::Error;
};
struct NonPositiveQ : Error {
    using Error::Error;
};
struct NonPositiveChi : Error {
    using Error::Error;
};
struct BadExponent : Error {
    using Error::Error;
};
struct NotARoot : Error {
    using Error::Error;
};
struct DegenerateForm : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    using Error::Error;
};
struct NotSymplectic : Error {
    using Error::Error;
};
struct NotAnIsometry : Error {
    using Error::Error;
};
struct RootFindFailure : Error {
    using Error::Error;
};
struct IntOverflow : Error {
    using Error::Error;
};

// Parse failures carry the 1-based line number of the offending line.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_number)
        : Error(msg + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
    int line;
};

}  // namespace latmon
