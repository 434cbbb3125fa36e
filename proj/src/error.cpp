#include <actlab/error.hpp>

namespace actlab {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::OutOfRangeEntry: return "OutOfRangeEntry";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::UnitLawViolation: return "UnitLawViolation";
    case ErrorKind::CompatibilityViolation: return "CompatibilityViolation";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::NotTwoSided: return "NotTwoSided";
    case ErrorKind::NotASubact: return "NotASubact";
    case ErrorKind::EmptySubact: return "EmptySubact";
    case ErrorKind::WellDefinednessFailure: return "WellDefinednessFailure";
    }
    return "Unknown";
}

} // namespace actlab
