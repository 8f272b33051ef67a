#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace levelcone {

enum class Errc {
  NotDivisible,
  EmptyColumn,
  NotSingleEntry,
  DivisionBySharedShift,
  NoConsistentFill,
  NotIncreasing,
  OutOfRange,
  NotInCone,
  NotShiftSeparated,
  ShapeError,
  NegativeEntry,
  NotACancellation,
  NotLevelShape,
  NoSignChange,
  NotModuleHVector,
  ZeroPolynomial,
  NotOSequence,
  CertificateFailed,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::EmptyColumn: return "EmptyColumn";
    case Errc::NotSingleEntry: return "NotSingleEntry";
    case Errc::DivisionBySharedShift: return "DivisionBySharedShift";
    case Errc::NoConsistentFill: return "NoConsistentFill";
    case Errc::NotIncreasing: return "NotIncreasing";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotInCone: return "NotInCone";
    case Errc::NotShiftSeparated: return "NotShiftSeparated";
    case Errc::ShapeError: return "ShapeError";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::NotACancellation: return "NotACancellation";
    case Errc::NotLevelShape: return "NotLevelShape";
    case Errc::NoSignChange: return "NoSignChange";
    case Errc::NotModuleHVector: return "NotModuleHVector";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotOSequence: return "NotOSequence";
    case Errc::CertificateFailed: return "CertificateFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failing operation in the library throws this. `index()` carries
/// the column, row or degree the error refers to when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, int index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        index_(index) {}

  Errc code() const noexcept { return code_; }
  int index() const noexcept { return index_; }

 private:
  Errc code_;
  int index_;
};

}  // namespace levelcone
