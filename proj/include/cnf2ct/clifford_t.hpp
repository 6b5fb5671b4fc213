#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cnf2ct/formula.hpp"
#include "cnf2ct/reversible.hpp"

namespace cnf2ct {

using QubitId = std::uint32_t;

enum class QGateKind { H, S, Sdg, T, Tdg, X, CNOT };

struct QGate {
  QGateKind kind;
  /// qubits[0] for single-qubit gates; control then target for CNOT.
  std::array<QubitId, 2> qubits{};

  static QGate single(QGateKind kind, QubitId q);
  static QGate cnot(QubitId control, QubitId target);

  std::size_t arity() const noexcept { return kind == QGateKind::CNOT ? 2 : 1; }
  bool is_t_type() const noexcept {
    return kind == QGateKind::T || kind == QGateKind::Tdg;
  }

  friend bool operator==(const QGate& a, const QGate& b) noexcept;
};

struct QubitLayout {
  std::uint32_t n_inputs = 0;
  std::uint32_t n_ancillas = 0;
  std::uint32_t n_outputs = 0;

  friend bool operator==(const QubitLayout&, const QubitLayout&) = default;
};

struct QuantumCircuit {
  std::uint32_t n_qubits = 0;
  std::vector<QGate> gates;
  QubitLayout layout;

  /// Number of T and Tdg gates.
  std::size_t t_count() const noexcept;
  std::size_t clifford_count() const noexcept { return gates.size() - t_count(); }

  friend bool operator==(const QuantumCircuit&, const QuantumCircuit&) = default;
};

/// Exact Toffoli with 7 T-type and 8 Clifford gates.
std::array<QGate, 15> lower_toffoli(QubitId c1, QubitId c2, QubitId target);

/// NOT -> X, CNOT -> CNOT, TOFFOLI -> lower_toffoli; qubit i is wire i.
QuantumCircuit lower_circuit(const ReversibleCircuit& c);

inline constexpr std::uint32_t kDefaultQubitCap = 26;

/// H on every input, X on the output, the lowered tidy circuit for phi, then
/// H on every input. The X prepares the output in |1>, so the all-zero
/// amplitude counts satisfying rather than falsifying assignments.
QuantumCircuit build_counting_circuit(const Formula& phi,
                                      std::uint32_t qubit_cap = kDefaultQubitCap);

/// Qubits compile_formula(phi) would use, without building it.
std::uint32_t counting_circuit_qubits(const Formula& phi) noexcept;

/// OpenQASM 2.0 subset: one qreg, gates h s sdg t tdg x cx. The layout is
/// carried in a `// layout` comment.
std::string emit_qasm(const QuantumCircuit& c);
QuantumCircuit parse_qasm(std::string_view text);

}  // namespace cnf2ct
