#pragma once

/**
 * @file error.hpp
 * @brief Error kinds shared by every module.
 *
 * Domain failures are reported with a single exception type carrying a
 * stable machine-readable kind. The CLI maps the kind name to its output.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace binform {

enum class ErrorKind {
    PrecisionExhausted,
    ReconstructionBoundExceeded,
    UnsupportedDegree,
    ZeroDiscriminant,
    BadParams,
    BadInput,
    ParseError,
    ZeroMatrix,
    SingularMatrix,
    BoundsTooLarge,
    NotOrderThree,
    NotIntegral,
    NotPrimitive,
    NotInTable,
    GroupAxiomFailure,
    BadWitness,
    NotAutomorphism,
    ParityGap,
    NoIsomorphism,
    AlreadyEquivalent,
    NotEqualValueSets,
    NotIsomorphism,
    BoxTooLarge,
    InternalInvariant,
};

constexpr std::string_view kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::ReconstructionBoundExceeded: return "ReconstructionBoundExceeded";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::ZeroDiscriminant: return "ZeroDiscriminant";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::NotOrderThree: return "NotOrderThree";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotInTable: return "NotInTable";
    case ErrorKind::GroupAxiomFailure: return "GroupAxiomFailure";
    case ErrorKind::BadWitness: return "BadWitness";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::ParityGap: return "ParityGap";
    case ErrorKind::NoIsomorphism: return "NoIsomorphism";
    case ErrorKind::AlreadyEquivalent: return "AlreadyEquivalent";
    case ErrorKind::NotEqualValueSets: return "NotEqualValueSets";
    case ErrorKind::NotIsomorphism: return "NotIsomorphism";
    case ErrorKind::BoxTooLarge: return "BoxTooLarge";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return kind_name(kind_); }

private:
    ErrorKind kind_;
};

/// Parse failure with the byte offset and the set of tokens that would have
/// been accepted there.
class ParseError : public Error {
public:
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string& what)
        : Error(ErrorKind::ParseError, what + " at position " + std::to_string(position)),
          position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void ensure(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace binform
