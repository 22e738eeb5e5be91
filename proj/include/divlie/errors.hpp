#pragma once

#include <stdexcept>
#include <string>

namespace divlie {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different variable counts.
struct DimensionError : Error {
    using Error::Error;
};

/// Variable or direction index outside 1..n.
struct IndexError : Error {
    using Error::Error;
};

/// Input rejected by a precondition (zero element, constant seed, bad spec...).
struct ValueError : Error {
    using Error::Error;
};

/// Derivation mixes distinct weight classes.
struct NotHomogeneousError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " at line " + std::to_string(line_) + ", col " + std::to_string(col_)),
          line(line_), column(col_) {}
};

}  // namespace divlie
