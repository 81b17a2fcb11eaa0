#include "colorful/error.hpp"

namespace colorful {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotProperlyColored: return "NotProperlyColored";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::TooManyColors: return "TooManyColors";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::NotRankThree: return "NotRankThree";
    case ErrorCode::NotAPolytope: return "NotAPolytope";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::DoesNotGenerate: return "DoesNotGenerate";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

DomainError::DomainError(ErrorCode code, std::string detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace colorful
