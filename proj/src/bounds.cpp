#include "cnf2ct/bounds.hpp"

#include <algorithm>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace cnf2ct {

namespace mp = boost::multiprecision;

namespace {

constexpr std::uint64_t kMaxBinomialTop = 1u << 20;

// Real-valued limits such as n/theta1 are floored; the slack absorbs
// representation error in products like 4 * 2.0 * 10.
std::uint64_t floor_count(double value) {
  return static_cast<std::uint64_t>(std::floor(value + 1e-9));
}

}  // namespace

LeafCountCheck leafcount_bound_check(double theta1, double theta2,
                                     std::uint32_t n) {
  if (n == 0) throw Error(Errc::DomainError, "leaf-count check needs n >= 1");
  if (!(theta1 >= 1.0 && theta2 >= 1.0)) {
    throw Error(Errc::DomainError, "thresholds must be at least 1");
  }
  const double nn = static_cast<double>(n);
  LeafCountCheck out;
  const double top = 4.0 * theta1 * nn;
  if (top > static_cast<double>(kMaxBinomialTop)) {
    throw Error(Errc::Overflow, "binomial top 4 theta1 n too large for exact sum");
  }
  out.binomial_top = floor_count(top);
  out.summation_limit = std::min<std::uint64_t>(
      floor_count(nn / theta1 + 4.0 * theta1 * nn / theta2), out.binomial_top);

  mp::cpp_int term = 1;
  mp::cpp_int sum = 1;
  for (std::uint64_t i = 0; i < out.summation_limit; ++i) {
    term = term * (out.binomial_top - i) / (i + 1);
    sum += term;
  }

  using Big = mp::cpp_bin_float_100;
  const Big exponent = gamma(Big(theta1), Big(theta2)) * Big(n);
  const Big rhs = mp::pow(Big(2), exponent);
  const Big lhs(sum);

  out.rhs_exponent = static_cast<double>(exponent);
  out.log2_lhs = static_cast<double>(mp::log(lhs) / mp::log(Big(2)));
  out.holds = lhs <= rhs;
  return out;
}

ExponentReport compose_exponent(double a, const ThetaParams& thetas,
                                double budget) {
  if (!(a >= 0.0)) throw Error(Errc::DomainError, "exponent a must be >= 0");
  const double e = eta(thetas);
  const double g = gamma(thetas);
  const double total = a * e + g;
  const double displayed = a * (e + g);
  return ExponentReport{thetas, e,      g,     a,
                        total,  displayed, budget, total < budget,
                        displayed < budget};
}

ConsistencyReport tcount_constant_check() {
  ConsistencyReport r{};
  r.per_t_exponent = kPerTGateExponent;
  r.t_gates_per_length = kTGatesPerLength;
  r.product = kTGatesPerLength * kPerTGateExponent;
  r.stated = kPerLengthExponent;
  r.relative_deviation = std::abs(r.product - r.stated) / r.stated;
  r.tolerance = 3e-4;
  r.budget = kLog2OnePointThree;
  r.passes = r.relative_deviation <= r.tolerance;
  return r;
}

EpsilonBudget epsilon_budget(double eps, double length_coefficient) {
  if (!(eps > 0.0 && length_coefficient > 0.0)) {
    throw Error(Errc::DomainError, "epsilon and length coefficient must be > 0");
  }
  const double half = eps / 2.0;
  return {half, half / length_coefficient, half + half};
}

// ---------------------------------------------------------------------------
// Optimization

namespace {

double objective(double a, double theta1, double theta2) {
  if (!(theta1 >= 1.0 && theta1 <= theta2)) {
    return std::numeric_limits<double>::infinity();
  }
  if (!(gamma_argument(theta1, theta2) < 1.0)) {
    return std::numeric_limits<double>::infinity();
  }
  return a * eta(theta1, theta2) + gamma(theta1, theta2);
}

std::vector<double> log_axis(const AxisRange& r) {
  if (r.steps == 0 || !(r.lo > 0.0) || !(r.hi >= r.lo)) {
    throw Error(Errc::EmptyGrid, "axis needs steps > 0 and 0 < lo <= hi");
  }
  std::vector<double> out(r.steps);
  if (r.steps == 1) {
    out[0] = r.lo;
    return out;
  }
  const double llo = std::log(r.lo);
  const double lhi = std::log(r.hi);
  for (std::size_t i = 0; i < r.steps; ++i) {
    out[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                static_cast<double>(r.steps - 1));
  }
  out.front() = r.lo;
  out.back() = r.hi;
  return out;
}

// Golden-section minimisation of f over log(x) in [lo, hi].
template <typename F>
double golden_log(F&& f, double lo, double hi, std::size_t& evaluations) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::log(lo);
  double b = std::log(hi);
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(std::exp(c));
  double fd = f(std::exp(d));
  evaluations += 2;
  for (int it = 0; it < 80; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(std::exp(d));
    }
    ++evaluations;
  }
  return std::exp((a + b) / 2.0);
}

}  // namespace

OptimizationResult optimize_thetas(double a, double budget,
                                   const ThetaGrid& grid) {
  if (!(a >= 0.0)) throw Error(Errc::DomainError, "exponent a must be >= 0");
  const auto axis1 = log_axis(grid.theta1);
  const auto axis2 = log_axis(grid.theta2);

  OptimizationResult out{compose_exponent(a, kReferenceThetas, budget),
                         compose_exponent(a, kReferenceThetas, budget)};
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  for (std::size_t i = 0; i < axis1.size(); ++i) {
    for (std::size_t j = 0; j < axis2.size(); ++j) {
      const double value = objective(a, axis1[i], axis2[j]);
      ++out.evaluations;
      if (value < best) {
        best = value;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (!std::isfinite(best)) {
    throw Error(Errc::EmptyGrid, "no feasible grid point");
  }

  // Refine within the neighbouring grid cells, clamped to the grid box.
  double t1 = axis1[best_i];
  double t2 = axis2[best_j];
  const double lo1 = axis1[best_i == 0 ? 0 : best_i - 1];
  const double hi1 = axis1[std::min(best_i + 1, axis1.size() - 1)];
  const double lo2 = axis2[best_j == 0 ? 0 : best_j - 1];
  const double hi2 = axis2[std::min(best_j + 1, axis2.size() - 1)];
  for (int round = 0; round < 40; ++round) {
    const double c1 = golden_log(
        [&](double x) { return objective(a, x, t2); }, lo1, hi1,
        out.evaluations);
    if (objective(a, c1, t2) < objective(a, t1, t2)) t1 = c1;
    const double c2 = golden_log(
        [&](double x) { return objective(a, t1, x); }, lo2, hi2,
        out.evaluations);
    if (objective(a, t1, c2) < objective(a, t1, t2)) t2 = c2;
  }

  out.best = compose_exponent(a, ThetaParams(t1, t2), budget);
  out.reference_relative_gap = (out.reference.total_exponent - out.best.total_exponent) /
                           out.best.total_exponent;
  out.reference_within_one_percent = std::abs(out.reference_relative_gap) <= 0.01;
  out.best_within_budget = out.best.total_exponent < budget;
  return out;
}

}  // namespace cnf2ct
