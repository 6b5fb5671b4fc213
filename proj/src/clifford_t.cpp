#include "cnf2ct/clifford_t.hpp"

#include <algorithm>

#include "cnf2ct/error.hpp"

namespace cnf2ct {

QGate QGate::single(QGateKind kind, QubitId q) { return {kind, {q, 0}}; }

QGate QGate::cnot(QubitId control, QubitId target) {
  return {QGateKind::CNOT, {control, target}};
}

bool operator==(const QGate& a, const QGate& b) noexcept {
  return a.kind == b.kind && a.qubits[0] == b.qubits[0] &&
         (a.arity() == 1 || a.qubits[1] == b.qubits[1]);
}

std::size_t QuantumCircuit::t_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      gates.begin(), gates.end(), [](const QGate& g) { return g.is_t_type(); }));
}

std::array<QGate, 15> lower_toffoli(QubitId c1, QubitId c2, QubitId target) {
  if (c1 == c2 || c1 == target || c2 == target) {
    throw Error(Errc::RepeatedQubit, "Toffoli needs three distinct qubits");
  }
  using K = QGateKind;
  const QubitId t = target;
  return {
      QGate::single(K::H, t),    QGate::cnot(c2, t),       QGate::single(K::Tdg, t),
      QGate::cnot(c1, t),        QGate::single(K::T, t),   QGate::cnot(c2, t),
      QGate::single(K::Tdg, t),  QGate::cnot(c1, t),       QGate::single(K::T, c2),
      QGate::single(K::T, t),    QGate::single(K::H, t),   QGate::cnot(c1, c2),
      QGate::single(K::T, c1),   QGate::single(K::Tdg, c2), QGate::cnot(c1, c2),
  };
}

QuantumCircuit lower_circuit(const ReversibleCircuit& c) {
  QuantumCircuit q;
  q.n_qubits = c.num_wires();
  q.layout = {c.n_inputs, c.n_ancillas, c.mode == CircuitMode::Tidy ? 1u : 0u};
  q.gates.reserve(c.gates.size() + 14 * c.toffoli_count());
  for (const RevGate& g : c.gates) {
    switch (g.kind) {
      case RevGateKind::Not:
        q.gates.push_back(QGate::single(QGateKind::X, g.wires[0]));
        break;
      case RevGateKind::Cnot:
        q.gates.push_back(QGate::cnot(g.wires[0], g.wires[1]));
        break;
      case RevGateKind::Toffoli: {
        const auto seq = lower_toffoli(g.wires[0], g.wires[1], g.wires[2]);
        q.gates.insert(q.gates.end(), seq.begin(), seq.end());
        break;
      }
    }
  }
  return q;
}

std::uint32_t counting_circuit_qubits(const Formula& phi) noexcept {
  if (phi.empty()) return phi.num_vars() + 1;
  // One ancilla per literal and per connective, plus the output.
  const auto len = static_cast<std::uint32_t>(length(phi));
  return phi.num_vars() + (len + 1) + len + 1;
}

QuantumCircuit build_counting_circuit(const Formula& phi,
                                      std::uint32_t qubit_cap) {
  if (counting_circuit_qubits(phi) > qubit_cap) {
    throw Error(Errc::QubitBudgetExceeded,
                std::to_string(counting_circuit_qubits(phi)) +
                    " qubits exceed the cap of " + std::to_string(qubit_cap));
  }
  // The empty conjunction is constant true: its tidy circuit is one NOT on
  // the output.
  ReversibleCircuit tidy;
  if (phi.empty()) {
    tidy.n_inputs = phi.num_vars();
    tidy.mode = CircuitMode::Tidy;
    tidy.result_wire = phi.num_vars();
    tidy.gates.push_back(RevGate::not_gate(tidy.result_wire));
  } else {
    tidy = compile_formula(phi);
  }
  const QuantumCircuit inner = lower_circuit(tidy);

  QuantumCircuit out;
  out.n_qubits = inner.n_qubits;
  out.layout = inner.layout;
  const std::uint32_t n = inner.layout.n_inputs;
  const QubitId output = inner.layout.n_inputs + inner.layout.n_ancillas;
  out.gates.reserve(inner.gates.size() + 2 * n + 1);
  for (QubitId q = 0; q < n; ++q) out.gates.push_back(QGate::single(QGateKind::H, q));
  out.gates.push_back(QGate::single(QGateKind::X, output));
  out.gates.insert(out.gates.end(), inner.gates.begin(), inner.gates.end());
  for (QubitId q = 0; q < n; ++q) out.gates.push_back(QGate::single(QGateKind::H, q));
  return out;
}

}  // namespace cnf2ct
