#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cqg/report.hpp"

namespace cqg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownLabel : Error {
    explicit UnknownLabel(const std::string& label) : Error("unknown irrep label: " + label) {}
};

/// A character product needed a fusion entry that is missing or leaves the
/// truncation window (and lossy mode was not requested).
struct TruncationOverflow : Error {
    using Error::Error;
};

struct NonKacInstance : Error {
    using Error::Error;
};

struct NoNormOracle : Error {
    using Error::Error;
};

struct SpaceMismatch : Error {
    using Error::Error;
};

struct InvalidGroupTable : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/// Raised by strict instance loading when the parsed data violates an
/// invariant; carries the full validation report.
struct ValidationError : Error {
    VerificationReport report;
    ValidationError(const std::string& msg, VerificationReport rep)
        : Error(msg), report(std::move(rep)) {}
};

}  // namespace cqg
