#pragma once

#include <stdexcept>
#include <string>

namespace ecm {

enum class ErrorCode {
  CycleDetected,
  RedundantCover,
  UnknownLabel,
  DuplicateLabel,
  TooManyElements,
  NotComparable,
  NotBounded,
  LabelClash,
  NotALattice,
  FaceNotInComplex,
  VoidComplex,
  EmptyPoset,
  RouteMismatch,
  NotPure,
  SearchBudgetExceeded,
  UnknownFamily,
  BadParams,
  BadInput,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::RedundantCover: return "RedundantCover";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::TooManyElements: return "TooManyElements";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::LabelClash: return "LabelClash";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::VoidComplex: return "VoidComplex";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::RouteMismatch: return "RouteMismatch";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace ecm
