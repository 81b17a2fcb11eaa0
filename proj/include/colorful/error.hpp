#pragma once

#include <stdexcept>
#include <string>

namespace colorful {

// Error codes surfaced by the CLI as "ERROR <code>: <detail>".
enum class ErrorCode {
  MalformedLine,
  DuplicateEdge,
  LoopEdge,
  NotRegular,
  NotProperlyColored,
  NotConnected,
  TooManyColors,
  Infeasible,
  ScaleExceeded,
  NotRankThree,
  NotAPolytope,
  NotInvolution,
  DoesNotGenerate,
  HypothesisViolated,
};

const char* to_string(ErrorCode code);

class DomainError : public std::runtime_error {
public:
  DomainError(ErrorCode code, std::string detail);

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace colorful
