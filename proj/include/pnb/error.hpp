#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pnb {

enum class ErrorCode {
  NotSubMultiset,
  InvalidPair,
  EmptyPair,
  NotAdmissible,
  InvalidBundleSequence,
  InvalidHilbert,
  RegularityTooSmall,
  UnknownFormat,
  ModulusMismatch,
  ShapeError,
  ExponentOverflow,
  EmptyA,
  NotABundle,
  NotGeneralization,
  ParseError,
  NotHomogeneous,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSubMultiset: return "NotSubMultiset";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::EmptyPair: return "EmptyPair";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::InvalidBundleSequence: return "InvalidBundleSequence";
    case ErrorCode::InvalidHilbert: return "InvalidHilbert";
    case ErrorCode::RegularityTooSmall: return "RegularityTooSmall";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::EmptyA: return "EmptyA";
    case ErrorCode::NotABundle: return "NotABundle";
    case ErrorCode::NotGeneralization: return "NotGeneralization";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Domain error carrying a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace pnb
