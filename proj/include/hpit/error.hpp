#pragma once

#include <stdexcept>
#include <string>

namespace hpit {

enum class ErrorKind {
    InvalidInput,  // non-finite entries, bad shapes, malformed arguments
    EmptyInput,
    TooLarge,      // guard or range limits
    Parse,
    Unsupported,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Process exit code for an error kind: 2 input, 3 guard/limit, 4 I/O.
[[nodiscard]] inline int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::TooLarge:
        return 3;
    case ErrorKind::Io:
        return 4;
    default:
        return 2;
    }
}

}  // namespace hpit
