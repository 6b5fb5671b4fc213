#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cnf2ct {

enum class Errc {
  // formulas and parsing
  MalformedHeader,
  MalformedClause,
  VariableOutOfRange,
  ClauseTooWide,
  EmptyClause,
  EmptyFormula,
  DimensionMismatch,
  TooManyVariables,
  // sparsification
  InvalidTheta,
  InvalidSunflower,
  RecursionBudgetExceeded,
  // constants
  DomainError,
  Overflow,
  EmptyGrid,
  // circuits and simulation
  IncompatibleInputRegisters,
  RepeatedQubit,
  QubitBudgetExceeded,
  IndexOutOfRange,
  MalformedCircuit,
  MalformedQasm,
  // command line
  InputUnreadable,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported as an Error carrying a machine-readable
/// code; the CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cnf2ct
