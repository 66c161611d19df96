#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arith {

enum class ErrorKind {
    DimensionMismatch,
    InvalidArgument,
    InvalidGeneralizedGraph,
    NotZMatrix,
    KernelMismatch,
    UnsupportedFamily,
    ReducibleMatrix,
    NotAStructure,
    NotAClique,
    ZeroX,
    NonPositivePQ,
    IntegralityViolation,
    DivisibilityViolation,
    PreconditionViolation,
    AffineResidueNotConstant,
    BasisExpressionFailure,
    ParseError,
    FileError,
    InvalidMatrix,
    UnknownTable,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it to an exit code and tests can assert on the exact reason.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    // The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace arith
