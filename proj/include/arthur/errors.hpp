#pragma once

#include <stdexcept>
#include <string>

namespace arthur {

// Precondition or validation failure on user-supplied data.
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal identity that should always hold did not.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(msg), line(l), column(c) {}
};

} // namespace arthur
