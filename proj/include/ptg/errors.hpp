#pragma once

#include <stdexcept>
#include <string>

namespace ptg {

/// Thrown when a caller violates an operation's documented precondition.
/// Distinct from "negative" results such as NotThreshold, which are values.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised by the input parsers; carries the 1-based line number (0 if unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ptg
