#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrank {

enum class Errc {
  NonPositiveInput,
  PerfectSquareInput,
  RationalInput,
  DegeneratePeriod,
  UnsupportedRhs,
  NotPrime,
  EvenPrime,
  WrongResidue,
  OddPeriod,
  ZeroDenominator,
  OddXp,
  NotASolution,
  WindowTooSmall,
  InvalidDiscriminant,
  NonIntegralEntry,
  NotSquareFree,
  OutOfRange,
  ParseError,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

// All precondition and domain failures in the library are reported through
// this type; `code()` names the failed contract.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qrank
