#pragma once

#include <stdexcept>
#include <string>

namespace splitcycle {

// Base for every error the library reports. Input problems (bad tokens,
// malformed files, invalid arguments) are reported as Error directly.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Raised before any work is done when an enumeration would exceed its cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace splitcycle
