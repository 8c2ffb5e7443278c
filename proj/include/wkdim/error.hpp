#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wkdim {

enum class ErrorCode {
  NotConnected,
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EmptyGraph,
  ParseError,
  InvalidFamilyParameters,
  SameVertex,
  TrivialGraph,
  InvalidArgument,
  KaboveKappa,
  KaboveKappaPrime,
  TooLarge,
  NotATree,
  WrongTreeClass,
  FormulaNotCovered,
  ParameterOutOfRange,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidFamilyParameters: return "InvalidFamilyParameters";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::TrivialGraph: return "TrivialGraph";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::KaboveKappa: return "KaboveKappa";
    case ErrorCode::KaboveKappaPrime: return "KaboveKappaPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::WrongTreeClass: return "WrongTreeClass";
    case ErrorCode::FormulaNotCovered: return "FormulaNotCovered";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when k exceeds the largest feasible threshold. Carries that
/// threshold and a human-readable witness (the pair attaining it).
class InfeasibleK : public Error {
 public:
  InfeasibleK(ErrorCode code, int k, int limit, std::string witness)
      : Error(code, "k=" + std::to_string(k) + " exceeds the maximum " +
                        std::to_string(limit) + " (witness " + witness + ")"),
        k_(k),
        limit_(limit),
        witness_(std::move(witness)) {}

  int k() const noexcept { return k_; }
  int limit() const noexcept { return limit_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  int k_;
  int limit_;
  std::string witness_;
};

}  // namespace wkdim
