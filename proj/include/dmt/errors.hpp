#ifndef DMT_ERRORS_HPP
#define DMT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dmt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedSimplexError : Error {
    using Error::Error;
};

struct NotInComplexError : Error {
    using Error::Error;
};

struct InvalidMorseFunctionError : Error {
    using Error::Error;
};

struct PropertyViolationError : Error {
    using Error::Error;
};

struct EndpointMismatchError : Error {
    using Error::Error;
};

struct MalformedPathError : Error {
    using Error::Error;
};

struct CannotInsertError : Error {
    using Error::Error;
};

struct CannotCancelError : Error {
    using Error::Error;
};

struct UnboundedEnumerationError : Error {
    using Error::Error;
};

// Raised when a structural fact proved about the algorithm fails to hold at
// runtime (e.g. a moduli-space vertex of degree > 2, or a cycle starting from
// a critical flowline).
struct InvariantViolationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + msg),
          line(line_), column(column_) {}
};

}  // namespace dmt

#endif
