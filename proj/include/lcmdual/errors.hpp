#pragma once

#include <stdexcept>
#include <string>

namespace lcmdual {

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on the mathematical input was violated
/// (zero/unit ideal where a proper one is required, ambient mismatch,
/// invalid partition or shift, unmet hypothesis).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check that should hold for valid input failed; the message
/// names the offending object (multidegree, matrix entry, component).
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lcmdual
