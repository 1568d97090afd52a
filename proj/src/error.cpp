#include "hublab/error.hpp"

namespace hublab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::NegativeLength: return "NegativeLength";
    case ErrorCode::ZeroLengthCycle: return "ZeroLengthCycle";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnreachablePair: return "UnreachablePair";
    case ErrorCode::EmptyCenterGraph: return "EmptyCenterGraph";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DirectedInput: return "DirectedInput";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidSphs: return "InvalidSPHS";
    case ErrorCode::NotAVertexCover: return "NotAVertexCover";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::TraceNotFromDHHL: return "TraceNotFromDHHL";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

namespace {
std::string decorate(ErrorCode code, const std::string& what,
                     std::optional<std::size_t> line) {
  std::string out = to_string(code);
  if (line) out += " (line " + std::to_string(*line) + ")";
  if (!what.empty()) out += ": " + what;
  return out;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& what,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, what, line)), code_(code), line_(line) {}

}  // namespace hublab
