#include "tapkit/error.hpp"

namespace tapkit {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotMonic: return "NotMonic";
    case Errc::Reducible: return "Reducible";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivideByZero: return "DivideByZero";
    case Errc::PrecisionNotReached: return "PrecisionNotReached";
    case Errc::ZeroPolynomialModP: return "ZeroPolynomialModP";
    case Errc::ZeroRoot: return "ZeroRoot";
    case Errc::BadParameters: return "BadParameters";
    case Errc::RepMismatch: return "RepMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::RepCheckFailed: return "RepCheckFailed";
    case Errc::DimensionError: return "DimensionError";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DeficiencyError: return "DeficiencyError";
    case Errc::NonTorsion: return "NonTorsion";
    case Errc::AllColumnsDegenerate: return "AllColumnsDegenerate";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::NonIntegralEntry: return "NonIntegralEntry";
    case Errc::RepNotIntegral: return "RepNotIntegral";
    case Errc::InternalMismatch: return "InternalMismatch";
    case Errc::NotSquarefreeModP: return "NotSquarefreeModP";
    case Errc::RootsNotUnits: return "RootsNotUnits";
    case Errc::ExtensionTooLarge: return "ExtensionTooLarge";
    case Errc::ReducibleInput: return "ReducibleInput";
    case Errc::GaloisDegreeUnknown: return "GaloisDegreeUnknown";
    case Errc::DegenerateAtOne: return "DegenerateAtOne";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace tapkit
