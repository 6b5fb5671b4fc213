#include "cnf2ct/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "cnf2ct/error.hpp"

namespace cnf2ct {

Literal Literal::from_dimacs(int value) {
  if (value == 0) {
    throw Error(Errc::MalformedClause, "literal 0 is a clause terminator");
  }
  return {static_cast<std::uint32_t>(std::abs(value)), value < 0};
}

Literal lit(int dimacs) { return Literal::from_dimacs(dimacs); }

// ---------------------------------------------------------------------------
// Clause

std::optional<Clause> Clause::from_literals(std::span<const Literal> lits) {
  if (lits.empty()) throw Error(Errc::EmptyClause, "clause has no literals");
  std::vector<Literal> sorted(lits.begin(), lits.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() > kMaxWidth) {
    throw Error(Errc::ClauseTooWide,
                "clause has " + std::to_string(sorted.size()) +
                    " distinct literals, at most 3 allowed");
  }
  // x and ~x are adjacent in encoding order.
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].var == sorted[i - 1].var) return std::nullopt;
  }
  Clause c;
  c.size_ = sorted.size();
  std::copy(sorted.begin(), sorted.end(), c.lits_.begin());
  return c;
}

std::optional<Clause> Clause::from_literals(
    std::initializer_list<Literal> lits) {
  return from_literals(std::span<const Literal>(lits.begin(), lits.size()));
}

Clause Clause::of(std::initializer_list<int> dimacs) {
  std::vector<Literal> lits;
  for (int v : dimacs) lits.push_back(Literal::from_dimacs(v));
  auto c = from_literals(lits);
  if (!c) throw Error(Errc::MalformedClause, "tautological clause");
  return *c;
}

bool Clause::contains(Literal l) const noexcept {
  return std::find(begin(), end(), l) != end();
}

bool Clause::is_subset_of(const Clause& other) const noexcept {
  return std::includes(other.begin(), other.end(), begin(), end());
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) noexcept {
  if (auto cmp = a.size_ <=> b.size_; cmp != 0) return cmp;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

bool operator==(const Clause& a, const Clause& b) noexcept {
  return (a <=> b) == 0;
}

// ---------------------------------------------------------------------------
// Formula

Formula::Formula(std::uint32_t n, std::vector<Clause> clauses)
    : n_(n), clauses_(std::move(clauses)) {
  for (const Clause& c : clauses_) {
    for (Literal l : c) {
      if (l.var > n_) {
        throw Error(Errc::VariableOutOfRange,
                    "variable " + std::to_string(l.var) + " exceeds n = " +
                        std::to_string(n_));
      }
    }
  }
  std::sort(clauses_.begin(), clauses_.end());
  auto last = std::unique(clauses_.begin(), clauses_.end());
  merged_ = static_cast<std::size_t>(clauses_.end() - last);
  clauses_.erase(last, clauses_.end());
}

std::size_t Formula::count_width(std::size_t k) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(clauses_.begin(), clauses_.end(),
                    [k](const Clause& c) { return c.size() == k; }));
}

bool Formula::contains(const Clause& c) const noexcept {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

Assignment Assignment::from_mask(std::uint32_t n, std::uint64_t mask) {
  Assignment x;
  x.bits.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) x.bits[i] = (mask >> i) & 1u;
  return x;
}

// ---------------------------------------------------------------------------
// DIMACS

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view tok, Int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

ParseResult parse_dimacs(std::string_view text) {
  ParseResult result;
  bool have_header = false;
  std::uint32_t n = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  bool in_clause = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0][0] == 'c') continue;
    if (tokens[0] == "%") break;  // SATLIB trailer
    if (tokens[0] == "p") {
      std::size_t declared = 0;
      if (have_header || tokens.size() != 4 || tokens[1] != "cnf" ||
          !parse_int(tokens[2], n) || !parse_int(tokens[3], declared)) {
        throw Error(Errc::MalformedHeader,
                    "line " + std::to_string(line_no) + ": expected 'p cnf <n> <m>'");
      }
      have_header = true;
      result.declared_clauses = declared;
      continue;
    }
    if (!have_header) {
      throw Error(Errc::MalformedHeader,
                  "line " + std::to_string(line_no) + ": clause before header");
    }
    for (std::string_view tok : tokens) {
      long value = 0;
      if (!parse_int(tok, value)) {
        throw Error(Errc::MalformedClause, "line " + std::to_string(line_no) +
                                               ": bad token '" +
                                               std::string(tok) + "'");
      }
      if (value == 0) {
        if (pending.empty()) {
          throw Error(Errc::EmptyClause,
                      "line " + std::to_string(line_no) + ": empty clause");
        }
        auto clause = Clause::from_literals(pending);
        if (clause) {
          clauses.push_back(*clause);
        } else {
          ++result.tautologies_dropped;
        }
        pending.clear();
        in_clause = false;
        continue;
      }
      if (static_cast<unsigned long>(std::labs(value)) > n) {
        throw Error(Errc::VariableOutOfRange,
                    "line " + std::to_string(line_no) + ": variable " +
                        std::to_string(std::labs(value)) +
                        " exceeds n = " + std::to_string(n));
      }
      pending.push_back(Literal::from_dimacs(static_cast<int>(value)));
      in_clause = true;
    }
  }
  if (!have_header) throw Error(Errc::MalformedHeader, "missing 'p cnf' header");
  if (in_clause) throw Error(Errc::MalformedClause, "unterminated final clause");

  result.formula = Formula(n, std::move(clauses));
  result.duplicates_merged = result.formula.merged_duplicates();
  return result;
}

std::string emit_dimacs(const Formula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.num_vars() << ' ' << phi.num_clauses() << '\n';
  for (const Clause& c : phi.clauses()) {
    for (Literal l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Semantics

std::size_t length(const Formula& phi) noexcept {
  if (phi.empty()) return 0;
  std::size_t total = 0;
  for (const Clause& c : phi.clauses()) total += c.size();
  return total - 1;
}

Formula reduce(const Formula& phi) {
  std::vector<Clause> kept;
  kept.reserve(phi.num_clauses());
  for (const Clause& c : phi.clauses()) {
    bool subsumed = false;
    // Every proper nonempty subset of c, enumerated by bitmask.
    const unsigned full = (1u << c.size()) - 1;
    for (unsigned mask = 1; mask < full && !subsumed; ++mask) {
      std::vector<Literal> sub;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (mask & (1u << i)) sub.push_back(c[i]);
      }
      subsumed = phi.contains(*Clause::from_literals(sub));
    }
    if (!subsumed) kept.push_back(c);
  }
  return Formula(phi.num_vars(), std::move(kept));
}

bool evaluate_mask(const Formula& phi, std::uint64_t mask) noexcept {
  for (const Clause& c : phi.clauses()) {
    bool sat = false;
    for (Literal l : c) {
      if ((((mask >> (l.var - 1)) & 1u) != 0) != l.negated) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

bool evaluate(const Formula& phi, const Assignment& x) {
  if (x.bits.size() != phi.num_vars()) {
    throw Error(Errc::DimensionMismatch,
                "assignment has " + std::to_string(x.bits.size()) +
                    " bits, formula has " + std::to_string(phi.num_vars()) +
                    " variables");
  }
  for (const Clause& c : phi.clauses()) {
    bool sat = std::any_of(c.begin(), c.end(), [&](Literal l) {
      return x.bits[l.var - 1] != l.negated;
    });
    if (!sat) return false;
  }
  return true;
}

std::uint64_t count_satisfying(const Formula& phi,
                               std::uint32_t brute_force_cap) {
  const std::uint32_t n = phi.num_vars();
  if (n > brute_force_cap || n > 62) {
    throw Error(Errc::TooManyVariables,
                "n = " + std::to_string(n) + " exceeds brute-force cap " +
                    std::to_string(brute_force_cap));
  }
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (evaluate_mask(phi, mask)) ++count;
  }
  return count;
}

UnitElimination eliminate_units(const Formula& phi) {
  UnitElimination out;
  std::vector<Clause> current = phi.clauses();
  for (;;) {
    auto unit = std::find_if(current.begin(), current.end(),
                             [](const Clause& c) { return c.size() == 1; });
    if (unit == current.end()) break;
    const Literal fixed = (*unit)[0];
    out.fixed.push_back(fixed);

    std::vector<Clause> next;
    for (const Clause& c : current) {
      if (c.contains(fixed)) continue;
      if (!c.contains(fixed.complement())) {
        next.push_back(c);
        continue;
      }
      std::vector<Literal> rest;
      for (Literal l : c) {
        if (l != fixed.complement()) rest.push_back(l);
      }
      if (rest.empty()) {
        out.conflict = true;
        out.formula = Formula(phi.num_vars(),
                              {*Clause::from_literals({fixed}),
                               *Clause::from_literals({fixed.complement()})});
        return out;
      }
      next.push_back(*Clause::from_literals(rest));
    }
    current = std::move(next);
  }
  out.formula = Formula(phi.num_vars(), std::move(current));
  return out;
}

}  // namespace cnf2ct
