#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

/// Arguments violate an operation's mathematical preconditions
/// (non-prime ideal passed to a localization, zero ring requested, ...).
class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text; carries the 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) +
                             ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace ringlab
