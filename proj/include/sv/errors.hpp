#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sv {

// Base class for every failure the library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the 64-bit range.  Results are never wrapped
// silently; callers that want bigger inputs must widen the integer type.
struct OverflowError : Error {
    using Error::Error;
};

// A caller broke a documented precondition (negative binomial top argument,
// p outside 0..n, mismatched tuple lengths, ...).
struct DomainError : Error {
    using Error::Error;
};

// A tensor product left the representable class of box sheaves.  Cohomology
// of such products is still available (see factor_tensor_cohomology); only a
// FormalSheaf-valued result is impossible.
struct NotRepresentableError : Error {
    using Error::Error;
};

// A classification search found a hit on the boundary shell of its search
// box, i.e. the window arguments under the bounds were violated at runtime.
struct SearchBoundError : Error {
    using Error::Error;
};

// Syntax error in a sheaf or variety expression; offset is the byte position
// of the offending token in the input string.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : Error(what + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

} // namespace sv
