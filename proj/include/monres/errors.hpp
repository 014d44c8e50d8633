#ifndef MONRES_ERRORS_HPP
#define MONRES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monres {

/// Base class for recoverable errors raised on bad input or infeasible
/// parameters.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two values living over different variable contexts were combined.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

/// Input text rejected by a parser. Positions are 1-based; line == 0 means
/// the input was a bare string rather than a file.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : Error(msg), line_(line), col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

/// Generator count exceeds the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace monres

#endif  // MONRES_ERRORS_HPP
