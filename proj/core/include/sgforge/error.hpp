#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgforge {

enum class Errc {
  EmptyGenerators,
  GcdNotOne,
  NotAMember,
  NotEffective,
  NotASemigroup,
  MultiplicityOne,
  DimensionMismatch,
  InvalidKunz,
  PreconditionViolated,
  NotCoprime,
  NegativeIndex,
  OutOfRange,
  WindowOverflow,
  IncompleteTable,
  IncompleteCensus,
  AlreadyOrdinary,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for every contract violation in the library.
/// Callers dispatch on code(); what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sgforge
