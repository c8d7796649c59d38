#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hallpaige {

/// Failure categories raised by the library. Each value names the contract
/// that was violated; the accompanying message names the offending datum.
enum class Errc {
  NotLatin,
  NotAssociative,
  NoIdentity,
  NoInverse,
  ClosureTooLarge,
  UnsupportedSpec,
  NotNormal,
  NotSubgroup,
  NotBad,
  BadPrecondition,
  SizeMismatch,
  TripleInvalid,
  EvenOrder,
  OddOrder,
  HasFixedPoint,
  NotInvolution,
  OrderMismatch,
  MatchingFailed,
  TripleViolation,
  BadSubmapping,
  NotCentralInvolution,
  QuotientOdd,
  SizeCondition,
  ContainmentFailed,
  Unsupported,
  SetTooLarge,
  NonCommutingCore,
  MissingCertificate,
  UnsupportedQ,
  NotFound,
  BadGroup,
  ParseError,
  IoError,
  Internal,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::NotLatin: return "NotLatin";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::ClosureTooLarge: return "ClosureTooLarge";
    case Errc::UnsupportedSpec: return "UnsupportedSpec";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotBad: return "NotBad";
    case Errc::BadPrecondition: return "BadPrecondition";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::TripleInvalid: return "TripleInvalid";
    case Errc::EvenOrder: return "EvenOrder";
    case Errc::OddOrder: return "OddOrder";
    case Errc::HasFixedPoint: return "HasFixedPoint";
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::MatchingFailed: return "MatchingFailed";
    case Errc::TripleViolation: return "TripleViolation";
    case Errc::BadSubmapping: return "BadSubmapping";
    case Errc::NotCentralInvolution: return "NotCentralInvolution";
    case Errc::QuotientOdd: return "QuotientOdd";
    case Errc::SizeCondition: return "SizeCondition";
    case Errc::ContainmentFailed: return "ContainmentFailed";
    case Errc::Unsupported: return "Unsupported";
    case Errc::SetTooLarge: return "SetTooLarge";
    case Errc::NonCommutingCore: return "NonCommutingCore";
    case Errc::MissingCertificate: return "MissingCertificate";
    case Errc::UnsupportedQ: return "UnsupportedQ";
    case Errc::NotFound: return "NotFound";
    case Errc::BadGroup: return "BadGroup";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

// Violations of this check are library bugs, never bad input.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(Errc::Internal, what);
}

}  // namespace hallpaige
