#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace toughwalks {

enum class ErrorCode {
  InvalidArgument,
  PreconditionViolated,
  NotConnected,
  Not2K2Free,
  NotATriangle,
  InvalidWitness,
  KTooSmall,
  NoNeighborInWitness,
  OddCycle,
  EvenCycle,
  TriangleMissing,
  NotDominating,
  BudgetExceeded,
  ParseError,
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base of every error thrown by the library. Budget exhaustion is the only
// code that callers are expected to retry (with a larger budget).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace toughwalks
