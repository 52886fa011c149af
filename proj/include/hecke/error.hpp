#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class Errc {
  NotDivisible,
  DivisionByZero,
  ZeroPolynomial,
  GroupTooLarge,
  InvalidArgument,
  MTooSmall,
  DomainError,
  RegimeNotCovered,
  LevelCapExceeded,
  ParamsOutOfRange,
  CaseNotCovered,
  CharTwoUnsupported,
  OddOrderUnsupported,
  MissingAlpha,
  PropertyFailure,
  SchemaError,
};

const char* errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hecke
