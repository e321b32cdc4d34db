#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mspit {

enum class ErrorCode {
  kCycleDetected,
  kDisconnectedInput,
  kDuplicateChild,
  kNegativeWeight,
  kUpgradeBelowBase,
  kTrivialTree,
  kUnknownNode,
  kLeafInSet,
  kInfeasibleIndex,
  kTargetUnreachable,
  kTooLargeForOracle,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` tells callers what failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the instance reader; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The target distance exceeds what upgrading every node can reach.
class TargetUnreachable : public Error {
 public:
  TargetUnreachable(std::int64_t target, std::int64_t ceiling)
      : Error(ErrorCode::kTargetUnreachable,
              "unreachable: ceiling " + std::to_string(ceiling)),
        target_(target),
        ceiling_(ceiling) {}

  std::int64_t target() const noexcept { return target_; }
  std::int64_t ceiling() const noexcept { return ceiling_; }

 private:
  std::int64_t target_;
  std::int64_t ceiling_;
};

}  // namespace mspit
