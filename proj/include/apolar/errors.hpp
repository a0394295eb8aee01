#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct MixedFields : Error {
  MixedFields() : Error("operands belong to different fields") {}
};

struct ContextMismatch : Error {
  explicit ContextMismatch(const std::string& what) : Error(what) {}
};

struct AmbientMismatch : Error {
  AmbientMismatch() : Error("ambient dimensions differ") {}
};

/// Parse failure with the byte offset of the offending character.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("zero polynomial") {}
};

struct NotHomogeneous : Error {
  NotHomogeneous() : Error("polynomial is not homogeneous") {}
};

struct NotBinomial : Error {
  NotBinomial() : Error("input has more than two terms") {}
};

struct NotCI : Error {
  explicit NotCI(const std::string& what) : Error(what) {}
};

struct WrongProvenance : Error {
  WrongProvenance() : Error("truncated ideal does not come from a contraction kernel") {}
};

struct NotInKernel : Error {
  NotInKernel() : Error("element does not annihilate the given polynomial") {}
};

struct WrongCase : Error {
  explicit WrongCase(const std::string& what) : Error(what) {}
};

struct CertificateFailed : Error {
  explicit CertificateFailed(const std::string& what) : Error(what) {}
};

struct CharacteristicRefused : Error {
  CharacteristicRefused()
      : Error("positive characteristic refused; pass the override flag to proceed") {}
};

struct DegreeOutOfRange : Error {
  DegreeOutOfRange() : Error("degree out of range") {}
};

}  // namespace apolar
