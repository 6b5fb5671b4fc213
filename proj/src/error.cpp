#include "cnf2ct/error.hpp"

namespace cnf2ct {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::MalformedClause: return "MalformedClause";
    case Errc::VariableOutOfRange: return "VariableOutOfRange";
    case Errc::ClauseTooWide: return "ClauseTooWide";
    case Errc::EmptyClause: return "EmptyClause";
    case Errc::EmptyFormula: return "EmptyFormula";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::InvalidTheta: return "InvalidTheta";
    case Errc::InvalidSunflower: return "InvalidSunflower";
    case Errc::RecursionBudgetExceeded: return "RecursionBudgetExceeded";
    case Errc::DomainError: return "DomainError";
    case Errc::Overflow: return "Overflow";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::IncompatibleInputRegisters: return "IncompatibleInputRegisters";
    case Errc::RepeatedQubit: return "RepeatedQubit";
    case Errc::QubitBudgetExceeded: return "QubitBudgetExceeded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::MalformedCircuit: return "MalformedCircuit";
    case Errc::MalformedQasm: return "MalformedQasm";
    case Errc::InputUnreadable: return "InputUnreadable";
  }
  return "Unknown";
}

}  // namespace cnf2ct
