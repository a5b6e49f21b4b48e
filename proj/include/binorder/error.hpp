#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binorder {

enum class ErrorKind {
  InvalidArgument,
  SizeCapExceeded,
  FactorizationIncomplete,
  NotCoprime,
  InvalidField,
  UnsupportedField,
  ZeroElement,
  ModulusMismatch,
  SpecMismatch,
  LengthMismatch,
  NoBinomialExists,
  IrreducibilityFailure,
  FormulaMismatch,
  BoundsTooLarge,
  BudgetExceeded,
  NoSolution,
};

std::string_view to_string(ErrorKind kind);

// Budget-type failures: the instance is valid but beyond the configured desk scale.
constexpr bool is_budget_error(ErrorKind kind) {
  return kind == ErrorKind::SizeCapExceeded || kind == ErrorKind::FactorizationIncomplete ||
         kind == ErrorKind::BoundsTooLarge || kind == ErrorKind::BudgetExceeded;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace binorder
