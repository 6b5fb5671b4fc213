#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// evaluation, counting or simulation code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "cnf2ct/formula.hpp"

namespace oracle {

using Clauses = std::vector<std::vector<int>>;

inline bool literal_value(int l, std::uint64_t mask) {
  const bool v = (mask >> (std::abs(l) - 1)) & 1u;
  return l > 0 ? v : !v;
}

inline bool eval(const Clauses& cls, std::uint64_t mask) {
  for (const auto& c : cls) {
    bool any = false;
    for (int l : c) any = any || literal_value(l, mask);
    if (!any) return false;
  }
  return true;
}

inline std::uint64_t count(const Clauses& cls, unsigned n) {
  std::uint64_t k = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) k += eval(cls, x);
  return k;
}

inline Clauses clauses_of(const cnf2ct::Formula& phi) {
  Clauses out;
  for (const auto& c : phi.clauses()) {
    std::vector<int> lits;
    for (auto l : c) lits.push_back(l.to_dimacs());
    out.push_back(lits);
  }
  return out;
}

inline cnf2ct::Formula formula_of(unsigned n, const Clauses& cls) {
  std::vector<cnf2ct::Clause> out;
  for (const auto& c : cls) {
    std::vector<cnf2ct::Literal> lits;
    for (int l : c) lits.push_back(cnf2ct::lit(l));
    if (auto clause = cnf2ct::Clause::from_literals(lits)) out.push_back(*clause);
  }
  return cnf2ct::Formula(n, std::move(out));
}

// Clause over distinct variables with random signs.
inline std::vector<int> random_clause(std::mt19937_64& rng, unsigned n, unsigned width) {
  std::vector<int> vars(n);
  for (unsigned i = 0; i < n; ++i) vars[i] = static_cast<int>(i) + 1;
  std::shuffle(vars.begin(), vars.end(), rng);
  std::vector<int> c(vars.begin(), vars.begin() + width);
  for (int& l : c) {
    if (rng() & 1u) l = -l;
  }
  return c;
}

// Widths summing to target_length + 1, so the length before merging is the
// target.
inline Clauses random_by_length(std::mt19937_64& rng, unsigned n, unsigned target_length) {
  Clauses cls;
  unsigned remaining = target_length + 1;
  while (remaining > 0) {
    const unsigned hi = std::min({3u, n, remaining});
    const unsigned width = std::uniform_int_distribution<unsigned>(1, hi)(rng);
    cls.push_back(random_clause(rng, n, width));
    remaining -= width;
  }
  return cls;
}

// m clauses with widths drawn from {1,2,3} with weights w1:w2:w3.
inline Clauses random_by_count(std::mt19937_64& rng, unsigned n, unsigned m,
                               unsigned w1 = 1, unsigned w2 = 3, unsigned w3 = 6) {
  std::discrete_distribution<unsigned> width({double(w1), double(w2), double(w3)});
  Clauses cls;
  for (unsigned i = 0; i < m; ++i) {
    cls.push_back(random_clause(rng, n, std::min(n, width(rng) + 1)));
  }
  return cls;
}

// Direct reading of the sunflower definitions: a literal (or pair) shared by
// at least theta k-clauses whose common intersection is exactly that heart.
inline bool has_good_sunflower(const cnf2ct::Formula& phi, double theta1, double theta2) {
  const Clauses cls = clauses_of(phi);
  std::map<std::vector<int>, std::vector<std::set<int>>> groups[3];
  for (const auto& c : cls) {
    const std::set<int> s(c.begin(), c.end());
    if (c.size() == 2) {
      for (int l : c) groups[0][{l}].push_back(s);
    } else if (c.size() == 3) {
      for (std::size_t i = 0; i < 3; ++i) {
        groups[2][{c[i]}].push_back(s);
        for (std::size_t j = i + 1; j < 3; ++j) {
          std::vector<int> key{c[i], c[j]};
          std::sort(key.begin(), key.end());
          groups[1][key].push_back(s);
        }
      }
    }
  }
  const double thresholds[3] = {theta1, theta1, theta2};
  for (int kind = 0; kind < 3; ++kind) {
    for (const auto& [heart, members] : groups[kind]) {
      if (static_cast<double>(members.size()) < thresholds[kind]) continue;
      std::set<int> common = members.front();
      for (const auto& s : members) {
        std::set<int> next;
        std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                              std::inserter(next, next.begin()));
        common = next;
      }
      if (common.size() == heart.size()) return true;
    }
  }
  return false;
}

}  // namespace oracle
