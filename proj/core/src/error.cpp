#include "dptree/error.hpp"

namespace dptree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotStrong: return "NotStrong";
    case ErrorCode::InvalidNetwork: return "InvalidNetwork";
    case ErrorCode::FanNotFound: return "FanNotFound";
    case ErrorCode::PathsNotFound: return "PathsNotFound";
    case ErrorCode::DecompositionError: return "DecompositionError";
    case ErrorCode::NotOnPath: return "NotOnPath";
    case ErrorCode::NotPendantTree: return "NotPendantTree";
    case ErrorCode::NotArborescence: return "NotArborescence";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InternalContractViolation: return "InternalContractViolation";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace dptree
