#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "cnf2ct/clifford_t.hpp"
#include "cnf2ct/error.hpp"

namespace cnf2ct {

/// Dense state over n qubits. Basis index bit q is the value of qubit q.
template <typename Scalar>
class StateVector {
 public:
  using Complex = std::complex<Scalar>;
  using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  /// |0...0>.
  explicit StateVector(std::uint32_t n_qubits)
      : StateVector(n_qubits, std::uint64_t{0}) {}

  /// Computational basis state |index>.
  StateVector(std::uint32_t n_qubits, std::uint64_t index)
      : n_qubits_(n_qubits) {
    if (n_qubits >= 40) {
      throw Error(Errc::QubitBudgetExceeded, "dense state of " +
                                                 std::to_string(n_qubits) +
                                                 " qubits");
    }
    const auto dim = Eigen::Index{1} << n_qubits;
    if (index >= static_cast<std::uint64_t>(dim)) {
      throw Error(Errc::IndexOutOfRange, "basis index out of range");
    }
    amps_ = Amplitudes::Zero(dim);
    amps_(static_cast<Eigen::Index>(index)) = Complex(1);
  }

  std::uint32_t num_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dimension() const noexcept { return amps_.size(); }
  const Amplitudes& amplitudes() const noexcept { return amps_; }
  Amplitudes& amplitudes() noexcept { return amps_; }
  Complex amplitude(std::uint64_t index) const {
    return amps_(static_cast<Eigen::Index>(index));
  }
  Scalar norm_squared() const { return amps_.squaredNorm(); }

  /// Basis index of the largest-magnitude amplitude (lowest index on ties).
  std::uint64_t argmax() const {
    Eigen::Index best = 0;
    amps_.cwiseAbs2().maxCoeff(&best);
    return static_cast<std::uint64_t>(best);
  }

 private:
  std::uint32_t n_qubits_;
  Amplitudes amps_;
};

namespace detail {

// Spreads k over the index bits other than positions lo < hi, leaving those
// two bits zero.
inline std::uint64_t insert_two_zero_bits(std::uint64_t k, unsigned lo,
                                          unsigned hi) noexcept {
  const std::uint64_t lo_mask = (std::uint64_t{1} << lo) - 1;
  k = (k & lo_mask) | ((k & ~lo_mask) << 1);
  const std::uint64_t hi_mask = (std::uint64_t{1} << hi) - 1;
  return (k & hi_mask) | ((k & ~hi_mask) << 1);
}

template <typename Scalar, typename PairOp>
void for_each_pair(std::complex<Scalar>* amps, std::uint64_t dim, unsigned q,
                   PairOp&& op) {
  const std::uint64_t stride = std::uint64_t{1} << q;
  for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
    std::complex<Scalar>* lo = amps + base;
    std::complex<Scalar>* hi = lo + stride;
    for (std::uint64_t j = 0; j < stride; ++j) op(lo[j], hi[j]);
  }
}

// Written out by hand: operator* on std::complex takes the slow
// Annex G path.
template <typename Scalar>
void phase_one_half(std::complex<Scalar>* amps, std::uint64_t dim, unsigned q,
                    const std::complex<Scalar>& phase) {
  const Scalar c = phase.real();
  const Scalar s = phase.imag();
  for_each_pair<Scalar>(amps, dim, q, [&](auto&, auto& one) {
    one = std::complex<Scalar>(one.real() * c - one.imag() * s,
                               one.real() * s + one.imag() * c);
  });
}

// Scatters the low bits of k into the given ascending bit positions.
inline std::uint64_t deposit_bits(std::uint64_t k, const unsigned* positions,
                                  std::size_t count) noexcept {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < count; ++i) {
    out |= ((k >> i) & 1u) << positions[i];
  }
  return out;
}

}  // namespace detail

/// In-place application of one Clifford+T gate.
template <typename Scalar>
void apply_gate(StateVector<Scalar>& psi, const QGate& g) {
  using Complex = std::complex<Scalar>;
  for (std::size_t i = 0; i < g.arity(); ++i) {
    if (g.qubits[i] >= psi.num_qubits()) {
      throw Error(Errc::IndexOutOfRange,
                  "qubit " + std::to_string(g.qubits[i]) + " on a " +
                      std::to_string(psi.num_qubits()) + "-qubit state");
    }
  }
  Complex* amps = psi.amplitudes().data();
  const auto dim = static_cast<std::uint64_t>(psi.dimension());
  const unsigned q = g.qubits[0];
  const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
  const Scalar quarter_pi = std::numbers::pi_v<Scalar> / Scalar(4);

  switch (g.kind) {
    case QGateKind::H:
      detail::for_each_pair<Scalar>(amps, dim, q, [&](Complex& a, Complex& b) {
        const Complex sum = (a + b) * inv_sqrt2;
        b = (a - b) * inv_sqrt2;
        a = sum;
      });
      break;
    case QGateKind::X:
      detail::for_each_pair<Scalar>(amps, dim, q,
                                    [](Complex& a, Complex& b) { std::swap(a, b); });
      break;
    case QGateKind::S:
      detail::for_each_pair<Scalar>(amps, dim, q, [](Complex&, Complex& b) {
        b = Complex(-b.imag(), b.real());
      });
      break;
    case QGateKind::Sdg:
      detail::for_each_pair<Scalar>(amps, dim, q, [](Complex&, Complex& b) {
        b = Complex(b.imag(), -b.real());
      });
      break;
    case QGateKind::T:
      detail::phase_one_half<Scalar>(amps, dim, q, std::polar(Scalar(1), quarter_pi));
      break;
    case QGateKind::Tdg:
      detail::phase_one_half<Scalar>(amps, dim, q, std::polar(Scalar(1), -quarter_pi));
      break;
    case QGateKind::CNOT: {
      const unsigned control = g.qubits[0];
      const unsigned target = g.qubits[1];
      if (control == target) {
        throw Error(Errc::RepeatedQubit, "CNOT control equals target");
      }
      const std::uint64_t cbit = std::uint64_t{1} << control;
      const std::uint64_t tbit = std::uint64_t{1} << target;
      const unsigned lo = std::min(control, target);
      const unsigned hi = std::max(control, target);
      for (std::uint64_t k = 0; k < dim / 4; ++k) {
        const std::uint64_t i = detail::insert_two_zero_bits(k, lo, hi) | cbit;
        std::swap(amps[i], amps[i | tbit]);
      }
      break;
    }
  }
}

/// Applies every gate in order. With check_norm, throws DomainError as soon
/// as the squared norm drifts from 1 by more than 1e-10.
template <typename Scalar>
void apply_circuit(StateVector<Scalar>& psi, const QuantumCircuit& c,
                   bool check_norm = false) {
  if (c.n_qubits != psi.num_qubits()) {
    throw Error(Errc::DimensionMismatch, "circuit and state widths differ");
  }
  for (const QGate& g : c.gates) {
    apply_gate(psi, g);
    if (check_norm && std::abs(psi.norm_squared() - Scalar(1)) > Scalar(1e-10)) {
      throw Error(Errc::DomainError, "norm drifted after a gate");
    }
  }
}

/// Same result as apply_circuit, bit for bit, with fewer passes over memory.
/// Runs of gates touching at most group_qubits distinct qubits are applied
/// to cache-sized blocks of 2^block_qubits amplitudes at a time.
template <typename Scalar>
void apply_circuit_blocked(StateVector<Scalar>& psi, const QuantumCircuit& c,
                           unsigned block_qubits = 14, unsigned group_qubits = 8) {
  const unsigned n = psi.num_qubits();
  if (c.n_qubits != n) {
    throw Error(Errc::DimensionMismatch, "circuit and state widths differ");
  }
  if (n <= block_qubits) {
    apply_circuit(psi, c);
    return;
  }
  group_qubits = std::min(group_qubits, block_qubits);
  for (const QGate& g : c.gates) {
    for (std::size_t i = 0; i < g.arity(); ++i) {
      if (g.qubits[i] >= n) {
        throw Error(Errc::IndexOutOfRange, "qubit " + std::to_string(g.qubits[i]) +
                                               " on a " + std::to_string(n) +
                                               "-qubit state");
      }
    }
  }

  std::vector<unsigned> local_pos;
  std::vector<unsigned> outer_pos;
  std::vector<std::uint64_t> offsets(std::size_t{1} << block_qubits);
  std::vector<unsigned> to_local(n);
  std::vector<QGate> local_gates;
  StateVector<Scalar> block(block_qubits);
  std::complex<Scalar>* amps = psi.amplitudes().data();
  std::complex<Scalar>* buf = block.amplitudes().data();

  std::size_t first = 0;
  while (first < c.gates.size()) {
    std::uint64_t mask = 0;
    std::size_t last = first;
    for (; last < c.gates.size(); ++last) {
      std::uint64_t next = mask;
      for (std::size_t i = 0; i < c.gates[last].arity(); ++i) {
        next |= std::uint64_t{1} << c.gates[last].qubits[i];
      }
      if (static_cast<unsigned>(std::popcount(next)) > group_qubits) break;
      mask = next;
    }

    // Gate qubits plus the lowest free qubits make up the block.
    for (unsigned q = 0; q < n && static_cast<unsigned>(std::popcount(mask)) < block_qubits; ++q) {
      mask |= std::uint64_t{1} << q;
    }
    local_pos.clear();
    outer_pos.clear();
    for (unsigned q = 0; q < n; ++q) {
      if ((mask >> q) & 1u) {
        to_local[q] = static_cast<unsigned>(local_pos.size());
        local_pos.push_back(q);
      } else {
        outer_pos.push_back(q);
      }
    }
    for (std::size_t j = 0; j < offsets.size(); ++j) {
      offsets[j] = detail::deposit_bits(j, local_pos.data(), local_pos.size());
    }
    local_gates.clear();
    for (std::size_t i = first; i < last; ++i) {
      QGate g = c.gates[i];
      for (std::size_t k = 0; k < g.arity(); ++k) g.qubits[k] = to_local[g.qubits[k]];
      local_gates.push_back(g);
    }

    const std::uint64_t n_blocks = std::uint64_t{1} << outer_pos.size();
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
      const std::uint64_t base = detail::deposit_bits(b, outer_pos.data(), outer_pos.size());
      for (std::size_t j = 0; j < offsets.size(); ++j) buf[j] = amps[base | offsets[j]];
      for (const QGate& g : local_gates) apply_gate(block, g);
      for (std::size_t j = 0; j < offsets.size(); ++j) amps[base | offsets[j]] = buf[j];
    }
    first = last;
  }
}

/// Full unitary by simulating every basis input; column j is C|j>.
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>
circuit_unitary(const QuantumCircuit& c) {
  if (c.n_qubits > 12) {
    throw Error(Errc::QubitBudgetExceeded, "unitary of more than 12 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    StateVector<Scalar> psi(c.n_qubits, static_cast<std::uint64_t>(j));
    apply_circuit(psi, c);
    u.col(j) = psi.amplitudes();
  }
  return u;
}

}  // namespace cnf2ct
