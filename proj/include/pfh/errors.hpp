#pragma once

#include <stdexcept>
#include <string>

namespace pfh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A multiplicity exceeded the guard of an angle representative, so the
/// answer would depend on which irrational angle is meant.
class GuardViolation : public Error {
public:
    using Error::Error;
};

/// Structurally invalid input: degree mismatch, non-admissible orbit set
/// where one is required, inconsistent composite data, and so on.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace pfh
