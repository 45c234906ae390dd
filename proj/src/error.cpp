#include "iml/core/error.hpp"

namespace iml {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kUnsatisfiable: return "Unsatisfiable";
    case ErrorCode::kEdgeAbsent: return "EdgeAbsent";
    case ErrorCode::kNotCubic: return "NotCubic";
    case ErrorCode::kNotHamiltonianCycle: return "NotHamiltonianCycle";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotThreeEdgeConnected: return "NotThreeEdgeConnected";
    case ErrorCode::kNotRegular: return "NotRegular";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotKArcStrong: return "NotKArcStrong";
    case ErrorCode::kPreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::kBadPattern: return "BadPattern";
    case ErrorCode::kBadPrecolouring: return "BadPrecolouring";
    case ErrorCode::kBadDivisibility: return "BadDivisibility";
    case ErrorCode::kNotBases: return "NotBases";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnknownProblem: return "UnknownProblem";
    case ErrorCode::kBadParams: return "BadParams";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace iml
