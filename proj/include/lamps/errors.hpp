#pragma once

#include <stdexcept>
#include <string>

namespace lamps {

/// Malformed input text. `line` is 1-based; 0 when no line is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// An enumeration exceeded its configured budget (instance too large, not a bug).
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem-backed invariant failed inside a solver. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace lamps
