#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hublab {

enum class ErrorCode {
  MalformedLine,
  NegativeLength,
  ZeroLengthCycle,
  VertexOutOfRange,
  SelfLoop,
  UnreachablePair,
  EmptyCenterGraph,
  TooLarge,
  DirectedInput,
  CapExceeded,
  InvalidSphs,
  NotAVertexCover,
  InfeasibleParams,
  TraceNotFromDHHL,
  InvalidOrder,
  Mismatch,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const { return code_; }
  // 1-based line of the offending input, when the error came from a parser.
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace hublab
