#pragma once

#include <stdexcept>
#include <string>

namespace nsgap {

// Failure classes surfaced to callers. The names returned by errc_name()
// are the diagnostics the CLI prints, so they are part of the interface.
enum class errc {
    empty_sequence,
    zero_or_negative_term,
    gcd_not_one,
    not_an_element,
    overflow,
    not_telescopic,
    length_mismatch,
    not_suitable,
    index_out_of_range,
    precondition_not_met,
    not_minimal,
    internal_non_integer,
    internal_inconsistency,
};

constexpr const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::empty_sequence: return "EmptySequence";
        case errc::zero_or_negative_term: return "ZeroOrNegativeTerm";
        case errc::gcd_not_one: return "GcdNotOne";
        case errc::not_an_element: return "NotAnElement";
        case errc::overflow: return "Overflow";
        case errc::not_telescopic: return "NotTelescopic";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::not_suitable: return "NotSuitable";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::precondition_not_met: return "PreconditionNotMet";
        case errc::not_minimal: return "NotMinimal";
        case errc::internal_non_integer: return "InternalNonInteger";
        case errc::internal_inconsistency: return "InternalInconsistency";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
          code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Violation of a guarantee the library itself is responsible for, e.g. a
// closed form produced a non-integer intermediate. Always a bug, never a
// property of the input.
class internal_error : public error {
public:
    using error::error;
};

} // namespace nsgap
