#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cnf2ct/error.hpp"
#include "cnf2ct/sparsifier.hpp"

namespace cnf2ct {

// Scalar-generic kernels. Real is double for reporting and a Boost
// multiprecision float for the exact leaf-count comparison.

/// Binary entropy in bits, with H(0) = H(1) = 0.
template <typename Real>
Real binary_entropy(const Real& p) {
  using std::log;
  if (!(p >= Real(0) && p <= Real(1))) {
    throw Error(Errc::DomainError, "binary entropy needs p in [0, 1]");
  }
  if (p == Real(0) || p == Real(1)) return Real(0);
  const Real q = Real(1) - p;
  return -(p * log(p) + q * log(q)) / log(Real(2));
}

/// Leaf length coefficient 2(theta1 + theta2).
template <typename Real>
Real eta(const Real& theta1, const Real& theta2) {
  return Real(2) * (theta1 + theta2);
}

/// The entropy argument 1/(4 theta1^2) + 1/theta2.
template <typename Real>
Real gamma_argument(const Real& theta1, const Real& theta2) {
  return Real(1) / (Real(4) * theta1 * theta1) + Real(1) / theta2;
}

/// log2 leaf-count coefficient 4 theta1 H(1/(4 theta1^2) + 1/theta2).
template <typename Real>
Real gamma(const Real& theta1, const Real& theta2) {
  const Real p = gamma_argument(theta1, theta2);
  if (!(p < Real(1))) {
    throw Error(Errc::DomainError,
                "gamma needs 1/(4 theta1^2) + 1/theta2 < 1");
  }
  return Real(4) * theta1 * binary_entropy(p);
}

inline double eta(const ThetaParams& t) { return eta(t.theta1(), t.theta2()); }
inline double gamma_argument(const ThetaParams& t) {
  return gamma_argument(t.theta1(), t.theta2());
}
inline double gamma(const ThetaParams& t) {
  return gamma(t.theta1(), t.theta2());
}

/// log2(1.3): the per-variable exponent of the reference 1.3^n solvers.
inline const double kLog2OnePointThree = std::log2(1.3);

// ---------------------------------------------------------------------------
// Leaf-count inequality

struct LeafCountCheck {
  std::uint64_t binomial_top = 0;     // 4 theta1 n
  std::uint64_t summation_limit = 0;  // floor(n/theta1 + 4 theta1 n/theta2)
  double log2_lhs = 0;                // log2 of the exact binomial sum
  double rhs_exponent = 0;            // gamma n
  bool holds = false;
};

/// Sum_{i <= n/theta1 + 4 theta1 n/theta2} C(4 theta1 n, i) <= 2^(gamma n),
/// with the left side in exact integers and the right side in 100-digit
/// floating point. Takes raw thresholds so grids may include theta1 > theta2.
LeafCountCheck leafcount_bound_check(double theta1, double theta2,
                                     std::uint32_t n);
inline LeafCountCheck leafcount_bound_check(const ThetaParams& t,
                                            std::uint32_t n) {
  return leafcount_bound_check(t.theta1(), t.theta2(), n);
}

// ---------------------------------------------------------------------------
// Exponent composition

struct ExponentReport {
  ThetaParams thetas;
  double eta;
  double gamma;
  double a;
  /// a*eta + gamma: 2^(gamma n) instances, each solved in 2^(a eta n).
  double total_exponent;
  /// a*(eta + gamma), the form displayed alongside the published constants.
  double displayed_exponent;
  double budget;
  bool passes;            // total_exponent < budget
  bool displayed_passes;  // displayed_exponent < budget
};

ExponentReport compose_exponent(double a, const ThetaParams& thetas,
                                double budget = kLog2OnePointThree);

inline constexpr double kPerTGateExponent = 2.2451e-8;
inline constexpr double kPerLengthExponent = 3.1432e-7;
inline constexpr double kTGatesPerLength = 14.0;

struct ConsistencyReport {
  double per_t_exponent;
  double t_gates_per_length;
  double product;
  double stated;
  double relative_deviation;
  double tolerance;
  double budget;
  bool passes;
};

/// Checks 14 * 2.2451e-8 against 3.1432e-7 to within 3e-4 relative.
ConsistencyReport tcount_constant_check();

/// Halving composition: eps' = eps/2 for sparsification and eps'/c per unit
/// length for the per-instance solver, so the total is eps' + eps' = eps.
struct EpsilonBudget {
  double eps_prime;
  double per_length_exponent;
  double total;
};
EpsilonBudget epsilon_budget(double eps, double length_coefficient);

// ---------------------------------------------------------------------------
// Theta optimization

struct AxisRange {
  double lo;
  double hi;
  std::size_t steps;  // log-spaced grid points, inclusive of both ends
};

struct ThetaGrid {
  AxisRange theta1{1.0, 1.0e4, 121};
  AxisRange theta2{1.0, 1.0e9, 181};
};

struct OptimizationResult {
  ExponentReport best;
  ExponentReport reference;
  std::size_t evaluations = 0;
  /// Relative gap between the reference point's objective and the optimum.
  double reference_relative_gap = 0;
  bool reference_within_one_percent = false;
  bool best_within_budget = false;
};

/// Log-spaced grid search followed by coordinate-wise golden-section
/// refinement of a*eta + gamma over 1 <= theta1 <= theta2.
OptimizationResult optimize_thetas(double a, double budget,
                                   const ThetaGrid& grid = {});

}  // namespace cnf2ct
