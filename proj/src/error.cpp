#include "slant4/error.hpp"

namespace slant4 {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NullVector: return "NullVector";
    case ErrorKind::NullIntermediate: return "NullIntermediate";
    case ErrorKind::DependentBasis: return "DependentBasis";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::StencilOutOfRange: return "StencilOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonMonotoneParameter: return "NonMonotoneParameter";
    case ErrorKind::TooFewSamples: return "TooFewSamples";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::NotUnitSpeed: return "NotUnitSpeed";
    case ErrorKind::InconsistentSignature: return "InconsistentSignature";
    case ErrorKind::InvalidInitialFrame: return "InvalidInitialFrame";
    case ErrorKind::SignatureViolation: return "SignatureViolation";
    case ErrorKind::NonPositiveCurvature: return "NonPositiveCurvature";
    case ErrorKind::NonPositiveK3: return "NonPositiveK3";
    case ErrorKind::NotSlant: return "NotSlant";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace slant4
