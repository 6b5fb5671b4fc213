#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cnf2ct/formula.hpp"

namespace cnf2ct {

using WireId = std::uint32_t;

enum class WireKind { Input, Ancilla, Output };

enum class RevGateKind { Toffoli, Cnot, Not };

/// wires[0..arity-1] lists the controls followed by the target.
struct RevGate {
  RevGateKind kind;
  std::array<WireId, 3> wires{};

  static RevGate toffoli(WireId c1, WireId c2, WireId target);
  static RevGate cnot(WireId control, WireId target);
  static RevGate not_gate(WireId target);

  std::size_t arity() const noexcept;
  WireId target() const noexcept { return wires[arity() - 1]; }

  friend bool operator==(const RevGate& a, const RevGate& b) noexcept;
};

enum class CircuitMode { Diagonal, Tidy };

/// Gates over the frozen layout [inputs 0..n-1][ancillas n..n+a-1] plus, in
/// tidy mode, one output wire n+a.
///
/// Diagonal mode: (x, 0, .) -> (x, *, ...) with f(x) on result_wire, inputs
/// never targeted. Tidy mode: (x, 0, y) -> (x, 0, y ^ f(x)) with
/// result_wire the output.
struct ReversibleCircuit {
  std::uint32_t n_inputs = 0;
  std::uint32_t n_ancillas = 0;
  std::vector<RevGate> gates;
  WireId result_wire = 0;
  CircuitMode mode = CircuitMode::Diagonal;

  std::uint32_t num_wires() const noexcept {
    return n_inputs + n_ancillas + (mode == CircuitMode::Tidy ? 1u : 0u);
  }
  WireKind wire_kind(WireId w) const noexcept;
  std::size_t toffoli_count() const noexcept;
  std::size_t count(RevGateKind kind) const noexcept;

  friend bool operator==(const ReversibleCircuit&,
                         const ReversibleCircuit&) = default;
};

ReversibleCircuit compile_literal(Literal l, std::uint32_t n);
/// Ancillas of u2 are renumbered after those of u1; one fresh ancilla holds
/// the result. One Toffoli beyond t1 + t2.
ReversibleCircuit compose_and(const ReversibleCircuit& u1,
                              const ReversibleCircuit& u2);
/// De Morgan: negate both results, Toffoli into a fresh ancilla, restore the
/// operands and negate the result.
ReversibleCircuit compose_or(const ReversibleCircuit& u1,
                             const ReversibleCircuit& u2);
ReversibleCircuit compose_not(const ReversibleCircuit& u1);
/// Compute, copy the result onto a fresh output wire, uncompute.
ReversibleCircuit make_tidy(const ReversibleCircuit& u);

/// Left fold of OR within clauses and AND across clauses, then make_tidy.
/// Uses exactly length(phi) Toffolis before tidying and 2*length(phi) after.
ReversibleCircuit compile_formula(const Formula& phi);
/// The diagonal circuit compile_formula wraps.
ReversibleCircuit compile_formula_diagonal(const Formula& phi);

/// Classical simulation; bits[w] is the value of wire w.
std::vector<bool> simulate_reversible(const ReversibleCircuit& c,
                                      std::vector<bool> bits);
/// Every gate is self-inverse, so the inverse is the reversed gate list.
ReversibleCircuit reversed(const ReversibleCircuit& c);

/// Line-oriented text: a header with the layout, then `TOF c1 c2 t`,
/// `CNOT c t` or `NOT t` per line.
std::string serialize(const ReversibleCircuit& c);
ReversibleCircuit parse_reversible(std::string_view text);

}  // namespace cnf2ct
