#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cytforge {

enum class ErrorCode {
  MixedField,
  DivisionByZero,
  NoRealRoots,
  DegenerateAllZero,
  InvalidRadicand,
  ParseError,
  InvalidPosition,
  NonSymmetricGram,
  RankMismatch,
  ZeroClass,
  MissingCurveData,
  MissingAmpleWitness,
  UndeclaredPairing,
  NullClass,
  NotPositiveRay,
  NotKahler,
  WrongFiberRank,
  HypothesesNotMet,
  NotSimplyConnected,
  InvalidBundle,
  BoundTooLarge,
  CorruptRecord,
  MismatchAgainstExpected,
  InvalidModel,
  IoError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedField: return "MixedField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NoRealRoots: return "NoRealRoots";
    case ErrorCode::DegenerateAllZero: return "DegenerateAllZero";
    case ErrorCode::InvalidRadicand: return "InvalidRadicand";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidPosition: return "InvalidPosition";
    case ErrorCode::NonSymmetricGram: return "NonSymmetricGram";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::MissingCurveData: return "MissingCurveData";
    case ErrorCode::MissingAmpleWitness: return "MissingAmpleWitness";
    case ErrorCode::UndeclaredPairing: return "UndeclaredPairing";
    case ErrorCode::NullClass: return "NullClass";
    case ErrorCode::NotPositiveRay: return "NotPositiveRay";
    case ErrorCode::NotKahler: return "NotKahler";
    case ErrorCode::WrongFiberRank: return "WrongFiberRank";
    case ErrorCode::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorCode::InvalidBundle: return "InvalidBundle";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::CorruptRecord: return "CorruptRecord";
    case ErrorCode::MismatchAgainstExpected: return "MismatchAgainstExpected";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::IoError: return "IoError";
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

}  // namespace cytforge
