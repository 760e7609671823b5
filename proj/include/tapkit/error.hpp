#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tapkit {

enum class Errc {
  NotMonic,
  Reducible,
  NotSquarefree,
  FieldMismatch,
  DivideByZero,
  PrecisionNotReached,
  ZeroPolynomialModP,
  ZeroRoot,
  BadParameters,
  RepMismatch,
  IndexOutOfRange,
  RepCheckFailed,
  DimensionError,
  ZeroPolynomial,
  DeficiencyError,
  NonTorsion,
  AllColumnsDegenerate,
  DegreeCapExceeded,
  NonIntegralEntry,
  RepNotIntegral,
  InternalMismatch,
  NotSquarefreeModP,
  RootsNotUnits,
  ExtensionTooLarge,
  ReducibleInput,
  GaloisDegreeUnknown,
  DegenerateAtOne,
  TooLarge,
  ParseError,
  ValidationError,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so the
// CLI can report it without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tapkit
