#include "cnf2ct/reversible.hpp"

#include <algorithm>
#include <sstream>

#include "cnf2ct/error.hpp"

namespace cnf2ct {

RevGate RevGate::toffoli(WireId c1, WireId c2, WireId target) {
  return {RevGateKind::Toffoli, {c1, c2, target}};
}
RevGate RevGate::cnot(WireId control, WireId target) {
  return {RevGateKind::Cnot, {control, target, 0}};
}
RevGate RevGate::not_gate(WireId target) {
  return {RevGateKind::Not, {target, 0, 0}};
}

std::size_t RevGate::arity() const noexcept {
  switch (kind) {
    case RevGateKind::Toffoli: return 3;
    case RevGateKind::Cnot: return 2;
    case RevGateKind::Not: return 1;
  }
  return 0;
}

bool operator==(const RevGate& a, const RevGate& b) noexcept {
  return a.kind == b.kind &&
         std::equal(a.wires.begin(), a.wires.begin() + a.arity(),
                    b.wires.begin());
}

WireKind ReversibleCircuit::wire_kind(WireId w) const noexcept {
  if (w < n_inputs) return WireKind::Input;
  if (w < n_inputs + n_ancillas) return WireKind::Ancilla;
  return WireKind::Output;
}

std::size_t ReversibleCircuit::count(RevGateKind kind) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      gates.begin(), gates.end(),
      [kind](const RevGate& g) { return g.kind == kind; }));
}

std::size_t ReversibleCircuit::toffoli_count() const noexcept {
  return count(RevGateKind::Toffoli);
}

// ---------------------------------------------------------------------------
// Diagonal blocks

ReversibleCircuit compile_literal(Literal l, std::uint32_t n) {
  if (l.var > n) {
    throw Error(Errc::VariableOutOfRange,
                "literal variable " + std::to_string(l.var) +
                    " exceeds n = " + std::to_string(n));
  }
  ReversibleCircuit c;
  c.n_inputs = n;
  c.n_ancillas = 1;
  c.result_wire = n;
  c.gates.push_back(RevGate::cnot(l.var - 1, n));
  if (l.negated) c.gates.push_back(RevGate::not_gate(n));
  return c;
}

namespace {

void require_diagonal(const ReversibleCircuit& u) {
  if (u.mode != CircuitMode::Diagonal) {
    throw Error(Errc::IncompatibleInputRegisters,
                "block composition needs diagonal circuits");
  }
}

// Concatenates u1 and u2 with u2's ancillas shifted past u1's, and reserves
// one fresh ancilla. Returns the combined circuit and u2's shifted result.
ReversibleCircuit concat_with_fresh(const ReversibleCircuit& u1,
                                    const ReversibleCircuit& u2,
                                    WireId& r2) {
  require_diagonal(u1);
  require_diagonal(u2);
  if (u1.n_inputs != u2.n_inputs) {
    throw Error(Errc::IncompatibleInputRegisters,
                "operands have " + std::to_string(u1.n_inputs) + " and " +
                    std::to_string(u2.n_inputs) + " inputs");
  }
  const WireId n = u1.n_inputs;
  auto shift = [&](WireId w) { return w < n ? w : w + u1.n_ancillas; };

  ReversibleCircuit out;
  out.n_inputs = n;
  out.n_ancillas = u1.n_ancillas + u2.n_ancillas + 1;
  out.gates = u1.gates;
  out.gates.reserve(u1.gates.size() + u2.gates.size() + 6);
  for (RevGate g : u2.gates) {
    for (std::size_t i = 0; i < g.arity(); ++i) g.wires[i] = shift(g.wires[i]);
    out.gates.push_back(g);
  }
  r2 = shift(u2.result_wire);
  out.result_wire = n + out.n_ancillas - 1;
  return out;
}

}  // namespace

ReversibleCircuit compose_and(const ReversibleCircuit& u1,
                              const ReversibleCircuit& u2) {
  WireId r2 = 0;
  ReversibleCircuit out = concat_with_fresh(u1, u2, r2);
  out.gates.push_back(RevGate::toffoli(u1.result_wire, r2, out.result_wire));
  return out;
}

ReversibleCircuit compose_or(const ReversibleCircuit& u1,
                             const ReversibleCircuit& u2) {
  WireId r2 = 0;
  ReversibleCircuit out = concat_with_fresh(u1, u2, r2);
  const WireId r1 = u1.result_wire;
  const WireId w = out.result_wire;
  out.gates.push_back(RevGate::not_gate(r1));
  out.gates.push_back(RevGate::not_gate(r2));
  out.gates.push_back(RevGate::toffoli(r1, r2, w));
  out.gates.push_back(RevGate::not_gate(r1));
  out.gates.push_back(RevGate::not_gate(r2));
  out.gates.push_back(RevGate::not_gate(w));
  return out;
}

ReversibleCircuit compose_not(const ReversibleCircuit& u1) {
  require_diagonal(u1);
  ReversibleCircuit out = u1;
  out.gates.push_back(RevGate::not_gate(u1.result_wire));
  return out;
}

ReversibleCircuit make_tidy(const ReversibleCircuit& u) {
  require_diagonal(u);
  ReversibleCircuit out;
  out.n_inputs = u.n_inputs;
  out.n_ancillas = u.n_ancillas;
  out.mode = CircuitMode::Tidy;
  out.result_wire = u.n_inputs + u.n_ancillas;
  out.gates = u.gates;
  out.gates.reserve(2 * u.gates.size() + 1);
  out.gates.push_back(RevGate::cnot(u.result_wire, out.result_wire));
  out.gates.insert(out.gates.end(), u.gates.rbegin(), u.gates.rend());
  return out;
}

ReversibleCircuit compile_formula_diagonal(const Formula& phi) {
  if (phi.empty()) {
    throw Error(Errc::EmptyFormula, "cannot compile a formula with no clauses");
  }
  const std::uint32_t n = phi.num_vars();
  auto compile_clause = [n](const Clause& c) {
    ReversibleCircuit acc = compile_literal(c[0], n);
    for (std::size_t i = 1; i < c.size(); ++i) {
      acc = compose_or(acc, compile_literal(c[i], n));
    }
    return acc;
  };
  const auto& clauses = phi.clauses();
  ReversibleCircuit acc = compile_clause(clauses.front());
  for (std::size_t i = 1; i < clauses.size(); ++i) {
    acc = compose_and(acc, compile_clause(clauses[i]));
  }
  return acc;
}

ReversibleCircuit compile_formula(const Formula& phi) {
  return make_tidy(compile_formula_diagonal(phi));
}

// ---------------------------------------------------------------------------
// Simulation

std::vector<bool> simulate_reversible(const ReversibleCircuit& c,
                                      std::vector<bool> bits) {
  if (bits.size() != c.num_wires()) {
    throw Error(Errc::DimensionMismatch,
                "got " + std::to_string(bits.size()) + " bits for " +
                    std::to_string(c.num_wires()) + " wires");
  }
  for (const RevGate& g : c.gates) {
    switch (g.kind) {
      case RevGateKind::Toffoli:
        if (bits[g.wires[0]] && bits[g.wires[1]]) bits[g.wires[2]].flip();
        break;
      case RevGateKind::Cnot:
        if (bits[g.wires[0]]) bits[g.wires[1]].flip();
        break;
      case RevGateKind::Not:
        bits[g.wires[0]].flip();
        break;
    }
  }
  return bits;
}

ReversibleCircuit reversed(const ReversibleCircuit& c) {
  ReversibleCircuit out = c;
  std::reverse(out.gates.begin(), out.gates.end());
  return out;
}

// ---------------------------------------------------------------------------
// Text format

std::string serialize(const ReversibleCircuit& c) {
  std::ostringstream out;
  out << "# reversible circuit, layout [inputs][ancillas][output]\n";
  out << "mode " << (c.mode == CircuitMode::Tidy ? "tidy" : "diagonal") << '\n';
  out << "inputs " << c.n_inputs << '\n';
  out << "ancillas " << c.n_ancillas << '\n';
  out << "outputs " << (c.mode == CircuitMode::Tidy ? 1 : 0) << '\n';
  out << "result " << c.result_wire << '\n';
  out << "gates " << c.gates.size() << '\n';
  for (const RevGate& g : c.gates) {
    switch (g.kind) {
      case RevGateKind::Toffoli:
        out << "TOF " << g.wires[0] << ' ' << g.wires[1] << ' ' << g.wires[2];
        break;
      case RevGateKind::Cnot:
        out << "CNOT " << g.wires[0] << ' ' << g.wires[1];
        break;
      case RevGateKind::Not:
        out << "NOT " << g.wires[0];
        break;
    }
    out << '\n';
  }
  return out.str();
}

ReversibleCircuit parse_reversible(std::string_view text) {
  ReversibleCircuit c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t declared_gates = 0;
  std::size_t outputs = 0;
  auto fail = [](const std::string& why) {
    throw Error(Errc::MalformedCircuit, why);
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    auto read = [&](auto& value) {
      if (!(fields >> value)) fail("bad operand in line '" + line + "'");
    };
    if (key == "mode") {
      std::string mode;
      read(mode);
      if (mode == "tidy") {
        c.mode = CircuitMode::Tidy;
      } else if (mode == "diagonal") {
        c.mode = CircuitMode::Diagonal;
      } else {
        fail("unknown mode '" + mode + "'");
      }
    } else if (key == "inputs") {
      read(c.n_inputs);
    } else if (key == "ancillas") {
      read(c.n_ancillas);
    } else if (key == "outputs") {
      read(outputs);
    } else if (key == "result") {
      read(c.result_wire);
    } else if (key == "gates") {
      read(declared_gates);
    } else if (key == "TOF") {
      WireId a, b, t;
      read(a), read(b), read(t);
      c.gates.push_back(RevGate::toffoli(a, b, t));
    } else if (key == "CNOT") {
      WireId a, t;
      read(a), read(t);
      c.gates.push_back(RevGate::cnot(a, t));
    } else if (key == "NOT") {
      WireId t;
      read(t);
      c.gates.push_back(RevGate::not_gate(t));
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (outputs != (c.mode == CircuitMode::Tidy ? 1u : 0u)) {
    fail("output count does not match mode");
  }
  if (declared_gates != c.gates.size()) fail("gate count mismatch");
  for (const RevGate& g : c.gates) {
    for (std::size_t i = 0; i < g.arity(); ++i) {
      if (g.wires[i] >= c.num_wires()) fail("wire index out of range");
      for (std::size_t j = 0; j < i; ++j) {
        if (g.wires[i] == g.wires[j]) fail("repeated wire in one gate");
      }
    }
  }
  return c;
}

}  // namespace cnf2ct
