#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cnf2ct {

/// A variable or its negation. Variables are 1-based.
struct Literal {
  std::uint32_t var = 1;
  bool negated = false;

  /// Canonical encoding 2*var + negated; the total order used everywhere.
  constexpr std::uint32_t encoding() const noexcept {
    return 2 * var + (negated ? 1u : 0u);
  }
  constexpr Literal complement() const noexcept { return {var, !negated}; }
  constexpr int to_dimacs() const noexcept {
    return negated ? -static_cast<int>(var) : static_cast<int>(var);
  }
  static Literal from_dimacs(int value);

  friend constexpr bool operator==(Literal a, Literal b) noexcept {
    return a.encoding() == b.encoding();
  }
  friend constexpr std::strong_ordering operator<=>(Literal a,
                                                    Literal b) noexcept {
    return a.encoding() <=> b.encoding();
  }
};

/// Shorthand for tests and examples: lit(3) is x3, lit(-3) is ~x3.
Literal lit(int dimacs);

/// A set of one to three literals, sorted by encoding, with no duplicates and
/// no complementary pair.
class Clause {
 public:
  static constexpr std::size_t kMaxWidth = 3;

  /// Collapses duplicate literals. Returns nullopt for a tautology. Throws
  /// EmptyClause or ClauseTooWide.
  static std::optional<Clause> from_literals(std::span<const Literal> lits);
  static std::optional<Clause> from_literals(std::initializer_list<Literal> lits);
  /// Builds from DIMACS integers; a tautology throws MalformedClause.
  static Clause of(std::initializer_list<int> dimacs);

  std::size_t size() const noexcept { return size_; }
  std::span<const Literal> literals() const noexcept {
    return {lits_.data(), size_};
  }
  Literal operator[](std::size_t i) const noexcept { return lits_[i]; }
  auto begin() const noexcept { return lits_.begin(); }
  auto end() const noexcept { return lits_.begin() + size_; }

  bool contains(Literal l) const noexcept;
  bool is_subset_of(const Clause& other) const noexcept;

  /// Canonical order: by size, then lexicographically by encoded literals.
  friend std::strong_ordering operator<=>(const Clause& a,
                                          const Clause& b) noexcept;
  friend bool operator==(const Clause& a, const Clause& b) noexcept;

 private:
  Clause() = default;
  std::array<Literal, kMaxWidth> lits_{};
  std::size_t size_ = 0;
};

/// A 3-CNF formula over variables 1..n: a canonically ordered set of clauses.
class Formula {
 public:
  Formula() = default;
  /// Sorts and deduplicates; throws VariableOutOfRange if a literal exceeds n.
  Formula(std::uint32_t n, std::vector<Clause> clauses);

  std::uint32_t num_vars() const noexcept { return n_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  std::size_t num_clauses() const noexcept { return clauses_.size(); }
  bool empty() const noexcept { return clauses_.empty(); }

  /// Number of clauses with exactly k literals.
  std::size_t count_width(std::size_t k) const noexcept;
  std::size_t m1() const noexcept { return count_width(1); }
  std::size_t m2() const noexcept { return count_width(2); }
  std::size_t m3() const noexcept { return count_width(3); }

  bool contains(const Clause& c) const noexcept;

  /// Number of clauses merged away as duplicates during construction.
  std::size_t merged_duplicates() const noexcept { return merged_; }

  friend bool operator==(const Formula& a, const Formula& b) noexcept {
    return a.n_ == b.n_ && a.clauses_ == b.clauses_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<Clause> clauses_;
  std::size_t merged_ = 0;
};

/// Truth assignment x_1..x_n; bits[i] is the value of x_{i+1}.
struct Assignment {
  std::vector<bool> bits;

  static Assignment from_mask(std::uint32_t n, std::uint64_t mask);
};

struct ParseResult {
  Formula formula;
  std::size_t tautologies_dropped = 0;
  std::size_t duplicates_merged = 0;
  std::size_t declared_clauses = 0;
};

ParseResult parse_dimacs(std::string_view text);
/// Canonical DIMACS: no comments, clauses in canonical order.
std::string emit_dimacs(const Formula& phi);

/// Number of binary connectives, sum of clause widths minus one. The empty
/// formula has length 0.
std::size_t length(const Formula& phi) noexcept;

/// Removes every clause that has a proper subset in the formula.
Formula reduce(const Formula& phi);

bool evaluate(const Formula& phi, const Assignment& x);
/// Bit i of mask is the value of x_{i+1}; requires n <= 64.
bool evaluate_mask(const Formula& phi, std::uint64_t mask) noexcept;

inline constexpr std::uint32_t kDefaultBruteForceCap = 24;

/// Exact number of satisfying assignments by enumeration of all 2^n inputs.
std::uint64_t count_satisfying(const Formula& phi,
                               std::uint32_t brute_force_cap =
                                   kDefaultBruteForceCap);

/// Optional preprocessing: repeatedly fix unit literals, drop satisfied
/// clauses and strip falsified literals. Off by default in the pipeline
/// because sparsification itself introduces unit clauses.
struct UnitElimination {
  Formula formula;
  std::vector<Literal> fixed;
  bool conflict = false;
};
UnitElimination eliminate_units(const Formula& phi);

}  // namespace cnf2ct
