#ifndef REFLAP_ERROR_HPP
#define REFLAP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace reflap {

enum class ErrorCode {
  InvalidVertex,
  SelfLoop,
  DuplicateEdge,
  InvalidSpec,
  IsolatedVertex,
  EmptyInterior,
  NotSymmetric,
  NoConvergence,
  TooSmall,
  ClusteringAmbiguous,
  TooLarge,
  Disconnected,
  LengthMismatch,
  ParseError,
  InvariantViolation,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::ClusteringAmbiguous: return "ClusteringAmbiguous";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace reflap

#endif  // REFLAP_ERROR_HPP
