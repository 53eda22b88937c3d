#pragma once

#include <stdexcept>
#include <string>

namespace ltc {

enum class ErrorKind {
    DimensionMismatch,
    NotAssociative,
    NotUnital,
    NotIdempotent,
    TrivialIdempotent,
    AnnihilatorConditionsFail,
    OffDiagonalCenter,
    NonUniqueEta,
    NotGMA,
    NotLTC,
    NotLTD,
    NotGLTD,
    InvalidDocument,
    HashMismatch,
    TheoremViolation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ltc
