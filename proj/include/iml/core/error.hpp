#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iml {

enum class ErrorCode {
  kEmptyGraph,
  kUnsatisfiable,
  kEdgeAbsent,
  kNotCubic,
  kNotHamiltonianCycle,
  kDisconnected,
  kNotThreeEdgeConnected,
  kNotRegular,
  kTooSmall,
  kTooLarge,
  kNotKArcStrong,
  kPreconditionUnmet,
  kBadPattern,
  kBadPrecolouring,
  kBadDivisibility,
  kNotBases,
  kSingular,
  kParse,
  kInvalidArgument,
  kUnknownProblem,
  kBadParams,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every precondition failure in the library; the
// code lets callers (and the CLI exit-code mapping) tell failures apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace iml
