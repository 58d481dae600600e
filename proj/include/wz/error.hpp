#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wz {

enum class ErrorKind {
    DivisionByZero,
    DegreeCapExceeded,
    UnsupportedOperator,
    QInvalid,
    NotSimplePole,
    NotAWZPair,
    NonConstantResidue,
    StructureViolation,
    SearchBoundExceeded,
    InvalidComponent,
    ZeroArgument,
    InvalidIndices,
    NotInvariant,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// front ends can map it onto exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// Knobs that bound the work of the exact algorithms. Passed by value; there
/// is no process-wide configuration.
struct Limits {
    int max_degree = 30;  // total-degree cap for factorization
    int s_max = 64;       // outer bound of the joint-orbit search
};

}  // namespace wz
