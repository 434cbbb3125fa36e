#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <actlab/subset.hpp>

namespace actlab {

enum class ErrorKind {
    Malformed,
    OutOfRangeEntry,
    TooLarge,
    NotAssociative,
    NoIdentity,
    UnitLawViolation,
    CompatibilityViolation,
    HostMismatch,
    NotTwoSided,
    NotASubact,
    EmptySubact,
    WellDefinednessFailure
};

std::string_view to_string(ErrorKind kind);

/// Raised when a table or a construction violates an axiom or precondition.
/// `witness` holds the offending indices, e.g. the triple (s, t, u) for
/// NotAssociative or (a, s, t) for CompatibilityViolation.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, std::vector<Element> witness = {}) :
        std::runtime_error(std::move(message)), kind_(kind), witness_(std::move(witness))
    {
    }

    ErrorKind kind() const { return kind_; }
    const std::vector<Element> & witness() const { return witness_; }

private:
    ErrorKind kind_;
    std::vector<Element> witness_;
};

} // namespace actlab
