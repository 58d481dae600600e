#include "wz/error.hpp"

namespace wz {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorKind::UnsupportedOperator: return "UnsupportedOperator";
        case ErrorKind::QInvalid: return "QInvalid";
        case ErrorKind::NotSimplePole: return "NotSimplePole";
        case ErrorKind::NotAWZPair: return "NotAWZPair";
        case ErrorKind::NonConstantResidue: return "NonConstantResidue";
        case ErrorKind::StructureViolation: return "StructureViolation";
        case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
        case ErrorKind::InvalidComponent: return "InvalidComponent";
        case ErrorKind::ZeroArgument: return "ZeroArgument";
        case ErrorKind::InvalidIndices: return "InvalidIndices";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace wz
