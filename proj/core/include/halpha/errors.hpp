#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace halpha {

// Input data violates a format or corpus invariant. `line` is the
// 1-based line number in the offending source, or 0 when the error is
// not tied to a specific line.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

// A name (author id, paper id, indicator name) does not resolve.
class LookupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation guard tripped (iteration budget exhausted and the
// enumeration fallback is infeasible). Never a silently wrong answer.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reading or writing an external stream failed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace halpha
