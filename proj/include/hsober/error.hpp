#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace hsober {

enum class ErrorKind {
    ParseError,
    NotT0,
    NotATopology,
    NotAlexandroffConsistent,
    DuplicateLabel,
    EmptySpace,
    SpaceMismatch,
    NotDirected,
    EmptySet,
    EmptyFamily,
    CapExceeded,
    UnsupportedDepth,
    NotInM,
    PreconditionViolated,
    MissingSystem,
    UnknownProperty,
    NotAFilter,
    EmptyIntersection,
    EmptyMember,
    NotContinuous,
    EndpointMismatch,
    NoHomeomorphism,
    UnknownClaim,
    Unrepresentable,
    InvariantViolation,
};

const char* to_string(ErrorKind k);

/// Every failure raised by the library. `detail` carries structured context
/// (failing pair, offending set, cap name) for machine-readable diagnostics.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg, nlohmann::json detail = nullptr)
        : std::runtime_error(msg), kind_(kind), detail_(std::move(detail)) {}

    ErrorKind kind() const { return kind_; }
    const nlohmann::json& detail() const { return detail_; }
    nlohmann::json to_json() const;

private:
    ErrorKind kind_;
    nlohmann::json detail_;
};

/// Raise InvariantViolation when cond is false. Used for the internal
/// assertions that back theorem-level guarantees.
inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorKind::InvariantViolation, what);
}

}  // namespace hsober
