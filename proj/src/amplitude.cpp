#include "cnf2ct/amplitude.hpp"

#include <bit>
#include <cmath>

#include "cnf2ct/error.hpp"
#include "cnf2ct/statevector.hpp"

namespace cnf2ct {

std::complex<double> zero_to_zero_amplitude(const QuantumCircuit& c,
                                            std::uint32_t qubit_cap) {
  if (c.n_qubits > qubit_cap) {
    throw Error(Errc::QubitBudgetExceeded,
                std::to_string(c.n_qubits) + " qubits exceed the cap of " +
                    std::to_string(qubit_cap));
  }
  StateVector<double> psi(c.n_qubits);
  apply_circuit_blocked(psi, c);
  return psi.amplitude(0);
}

std::string count_ratio(std::uint64_t count, std::uint32_t n) {
  if (count == 0) return "0";
  // The denominator is a power of two, so the gcd is too.
  const unsigned shift = std::min<unsigned>(std::countr_zero(count), n);
  const std::uint64_t num = count >> shift;
  const std::uint64_t den = std::uint64_t{1} << (n - shift);
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

AmplitudeReport verify_counting_identity(const Formula& phi,
                                         const AmplitudeOptions& options) {
  AmplitudeReport r;
  r.n = phi.num_vars();
  r.tolerance = options.tolerance;
  r.satisfying = count_satisfying(phi, options.brute_force_cap);
  r.expected = count_ratio(r.satisfying, r.n);
  r.expected_value = std::ldexp(static_cast<double>(r.satisfying),
                                -static_cast<int>(r.n));

  const QuantumCircuit c = build_counting_circuit(phi, options.qubit_cap);
  r.qubits = c.n_qubits;
  r.gate_count = c.gates.size();
  r.t_count = c.t_count();
  r.t_bound = 14 * length(phi);

  r.amplitude = zero_to_zero_amplitude(c, options.qubit_cap);
  r.abs_error = std::abs(r.amplitude - std::complex<double>(r.expected_value));
  r.imaginary_ok = std::abs(r.amplitude.imag()) <= options.tolerance;
  r.match = r.abs_error <= options.tolerance && r.imaginary_ok;

  const double half_step = std::ldexp(0.5, -static_cast<int>(r.n));
  r.within_half_ulp_of_count = r.abs_error <= half_step;
  r.nonzero_decides_sat = (std::abs(r.amplitude) >= half_step) == (r.satisfying > 0);
  return r;
}

}  // namespace cnf2ct
