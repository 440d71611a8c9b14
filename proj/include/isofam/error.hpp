#pragma once

#include <stdexcept>
#include <string>

namespace isofam {

enum class ErrorKind {
    Dimension,
    InvalidInterval,
    NotPerpendicular,
    Precondition,
    NotInRange,
    TheoremViolation,
    Uniqueness,
    NotFound,
    Mismatch,
    Overflow,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace isofam
