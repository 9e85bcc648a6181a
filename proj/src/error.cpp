#include "hsober/caps.hpp"
#include "hsober/error.hpp"

namespace hsober {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotT0: return "NotT0";
        case ErrorKind::NotATopology: return "NotATopology";
        case ErrorKind::NotAlexandroffConsistent: return "NotAlexandroffConsistent";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::EmptySpace: return "EmptySpace";
        case ErrorKind::SpaceMismatch: return "SpaceMismatch";
        case ErrorKind::NotDirected: return "NotDirected";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::EmptyFamily: return "EmptyFamily";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::UnsupportedDepth: return "UnsupportedDepth";
        case ErrorKind::NotInM: return "NotInM";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::MissingSystem: return "MissingSystem";
        case ErrorKind::UnknownProperty: return "UnknownProperty";
        case ErrorKind::NotAFilter: return "NotAFilter";
        case ErrorKind::EmptyIntersection: return "EmptyIntersection";
        case ErrorKind::EmptyMember: return "EmptyMember";
        case ErrorKind::NotContinuous: return "NotContinuous";
        case ErrorKind::EndpointMismatch: return "EndpointMismatch";
        case ErrorKind::NoHomeomorphism: return "NoHomeomorphism";
        case ErrorKind::UnknownClaim: return "UnknownClaim";
        case ErrorKind::Unrepresentable: return "Unrepresentable";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

nlohmann::json Error::to_json() const {
    nlohmann::json j;
    j["error"] = to_string(kind_);
    j["message"] = what();
    if (!detail_.is_null()) j["detail"] = detail_;
    return j;
}

void check_cap(std::size_t value, std::size_t cap, const std::string& name) {
    if (value > cap)
        throw Error(ErrorKind::CapExceeded, name + " cap exceeded",
                    {{"cap", name}, {"limit", cap}, {"value", value}});
}

}  // namespace hsober
