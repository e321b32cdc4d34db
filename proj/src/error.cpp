#include "mspit/error.hpp"

namespace mspit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kDisconnectedInput: return "DisconnectedInput";
    case ErrorCode::kDuplicateChild: return "DuplicateChild";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kUpgradeBelowBase: return "UpgradeBelowBase";
    case ErrorCode::kTrivialTree: return "TrivialTree";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kLeafInSet: return "LeafInSet";
    case ErrorCode::kInfeasibleIndex: return "InfeasibleIndex";
    case ErrorCode::kTargetUnreachable: return "TargetUnreachable";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mspit
