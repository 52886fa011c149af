#include "hecke/error.hpp"

namespace hecke {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::MTooSmall: return "MTooSmall";
    case Errc::DomainError: return "DomainError";
    case Errc::RegimeNotCovered: return "RegimeNotCovered";
    case Errc::LevelCapExceeded: return "LevelCapExceeded";
    case Errc::ParamsOutOfRange: return "ParamsOutOfRange";
    case Errc::CaseNotCovered: return "CaseNotCovered";
    case Errc::CharTwoUnsupported: return "CharTwoUnsupported";
    case Errc::OddOrderUnsupported: return "OddOrderUnsupported";
    case Errc::MissingAlpha: return "MissingAlpha";
    case Errc::PropertyFailure: return "PropertyFailure";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace hecke
