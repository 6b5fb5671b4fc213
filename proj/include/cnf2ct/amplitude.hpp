#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "cnf2ct/clifford_t.hpp"
#include "cnf2ct/formula.hpp"

namespace cnf2ct {

/// <0...0| C |0...0> by dense simulation.
std::complex<double> zero_to_zero_amplitude(
    const QuantumCircuit& c, std::uint32_t qubit_cap = kDefaultQubitCap);

struct AmplitudeOptions {
  std::uint32_t qubit_cap = kDefaultQubitCap;
  std::uint32_t brute_force_cap = kDefaultBruteForceCap;
  double tolerance = 1e-9;
};

struct AmplitudeReport {
  std::complex<double> amplitude;
  std::uint64_t satisfying = 0;
  std::uint32_t n = 0;
  std::string expected;  // exact ratio, e.g. "3/4"
  double expected_value = 0;
  double abs_error = 0;
  double tolerance = 0;
  bool imaginary_ok = false;  // |Im| <= tolerance
  bool match = false;         // abs_error <= tolerance and imaginary_ok
  /// |amplitude - expected| <= 2^-n / 2.
  bool within_half_ulp_of_count = false;
  /// (|amplitude| >= 2^-n / 2) == satisfiable.
  bool nonzero_decides_sat = false;
  std::uint32_t qubits = 0;
  std::size_t gate_count = 0;
  std::size_t t_count = 0;
  std::size_t t_bound = 0;  // 14 L
};

/// Exact count/2^n as a reduced fraction string.
std::string count_ratio(std::uint64_t count, std::uint32_t n);

/// Simulates the counting circuit of phi and compares its all-zero amplitude
/// with the brute-force satisfying fraction.
AmplitudeReport verify_counting_identity(const Formula& phi,
                                         const AmplitudeOptions& options = {});

}  // namespace cnf2ct
