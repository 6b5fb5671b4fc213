#include <cctype>
#include <charconv>
#include <sstream>

#include "cnf2ct/clifford_t.hpp"
#include "cnf2ct/error.hpp"

namespace cnf2ct {

namespace {

const char* mnemonic(QGateKind kind) {
  switch (kind) {
    case QGateKind::H: return "h";
    case QGateKind::S: return "s";
    case QGateKind::Sdg: return "sdg";
    case QGateKind::T: return "t";
    case QGateKind::Tdg: return "tdg";
    case QGateKind::X: return "x";
    case QGateKind::CNOT: return "cx";
  }
  return "?";
}

[[noreturn]] void fail(std::size_t line_no, const std::string& why) {
  throw Error(Errc::MalformedQasm, "line " + std::to_string(line_no) + ": " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Parses "q[<index>]".
QubitId parse_operand(std::string_view s, std::size_t line_no) {
  s = trim(s);
  if (s.size() < 4 || s.substr(0, 2) != "q[" || s.back() != ']') {
    fail(line_no, "expected q[<index>], got '" + std::string(s) + "'");
  }
  QubitId q = 0;
  auto digits = s.substr(2, s.size() - 3);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    fail(line_no, "bad qubit index '" + std::string(digits) + "'");
  }
  return q;
}

}  // namespace

std::string emit_qasm(const QuantumCircuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "// layout inputs=" << c.layout.n_inputs
      << " ancillas=" << c.layout.n_ancillas
      << " outputs=" << c.layout.n_outputs << '\n';
  out << "qreg q[" << c.n_qubits << "];\n";
  for (const QGate& g : c.gates) {
    out << mnemonic(g.kind) << " q[" << g.qubits[0] << ']';
    if (g.arity() == 2) out << ",q[" << g.qubits[1] << ']';
    out << ";\n";
  }
  return out.str();
}

QuantumCircuit parse_qasm(std::string_view text) {
  QuantumCircuit c;
  bool have_version = false;
  bool have_qreg = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.substr(0, 2) == "//") {
      std::istringstream fields{std::string(line.substr(2))};
      std::string word;
      fields >> word;
      if (word != "layout") continue;
      while (fields >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos) fail(line_no, "bad layout field");
        const std::string key = word.substr(0, eq);
        const auto value = static_cast<std::uint32_t>(std::stoul(word.substr(eq + 1)));
        if (key == "inputs") {
          c.layout.n_inputs = value;
        } else if (key == "ancillas") {
          c.layout.n_ancillas = value;
        } else if (key == "outputs") {
          c.layout.n_outputs = value;
        } else {
          fail(line_no, "unknown layout field '" + key + "'");
        }
      }
      continue;
    }
    if (line.back() != ';') fail(line_no, "missing ';'");
    line = trim(line.substr(0, line.size() - 1));

    if (line.substr(0, 8) == "OPENQASM") {
      if (trim(line.substr(8)) != "2.0") fail(line_no, "only OPENQASM 2.0");
      have_version = true;
      continue;
    }
    if (!have_version) fail(line_no, "missing OPENQASM header");
    if (line.substr(0, 7) == "include") continue;
    if (line.substr(0, 4) == "qreg") {
      if (have_qreg) fail(line_no, "only one quantum register supported");
      auto reg = trim(line.substr(4));
      c.n_qubits = parse_operand(reg, line_no);
      have_qreg = true;
      continue;
    }
    if (!have_qreg) fail(line_no, "gate before qreg");

    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) fail(line_no, "missing operands");
    const std::string_view name = line.substr(0, space);
    const std::string_view args = line.substr(space + 1);

    QGate g{};
    if (name == "cx") {
      const auto comma = args.find(',');
      if (comma == std::string_view::npos) fail(line_no, "cx needs two operands");
      g = QGate::cnot(parse_operand(args.substr(0, comma), line_no),
                      parse_operand(args.substr(comma + 1), line_no));
      if (g.qubits[0] == g.qubits[1]) fail(line_no, "cx on a repeated qubit");
    } else {
      QGateKind kind;
      if (name == "h") {
        kind = QGateKind::H;
      } else if (name == "s") {
        kind = QGateKind::S;
      } else if (name == "sdg") {
        kind = QGateKind::Sdg;
      } else if (name == "t") {
        kind = QGateKind::T;
      } else if (name == "tdg") {
        kind = QGateKind::Tdg;
      } else if (name == "x") {
        kind = QGateKind::X;
      } else {
        fail(line_no, "unsupported gate '" + std::string(name) + "'");
      }
      g = QGate::single(kind, parse_operand(args, line_no));
    }
    for (std::size_t i = 0; i < g.arity(); ++i) {
      if (g.qubits[i] >= c.n_qubits) fail(line_no, "qubit index out of range");
    }
    c.gates.push_back(g);
  }
  if (!have_qreg) fail(line_no, "no qreg declared");
  return c;
}

}  // namespace cnf2ct
