#include "cnf2ct/formula.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cnf2ct/error.hpp"
#include "oracles.hpp"

using namespace cnf2ct;

namespace {

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::DomainError;
}

}  // namespace

TEST(parse_dimacs, mixed_widths) {
  const auto r = parse_dimacs("p cnf 3 2\n1 -2 0\n-1 2 3 0");
  EXPECT_EQ(r.formula.num_vars(), 3u);
  EXPECT_EQ(r.formula.m2(), 1u);
  EXPECT_EQ(r.formula.m3(), 1u);
  EXPECT_EQ(r.tautologies_dropped, 0u);
}

TEST(parse_dimacs, tautology_is_dropped_and_counted) {
  const auto r = parse_dimacs("p cnf 2 1\n1 -1 0");
  EXPECT_EQ(r.formula.num_vars(), 2u);
  EXPECT_EQ(r.formula.num_clauses(), 0u);
  EXPECT_EQ(r.tautologies_dropped, 1u);
}

TEST(parse_dimacs, rejects_bad_input) {
  EXPECT_EQ(error_of([] { parse_dimacs("p cnf 2 1\n1 2 3 0"); }), Errc::VariableOutOfRange);
  EXPECT_EQ(error_of([] { parse_dimacs("1 2 0\n"); }), Errc::MalformedHeader);
  EXPECT_EQ(error_of([] { parse_dimacs("c only a comment\n"); }), Errc::MalformedHeader);
  EXPECT_EQ(error_of([] { parse_dimacs("p cnf x 1\n1 0"); }), Errc::MalformedHeader);
  EXPECT_EQ(error_of([] { parse_dimacs("p cnf 2 1\n1 a 0"); }), Errc::MalformedClause);
  EXPECT_EQ(error_of([] { parse_dimacs("p cnf 2 1\n1 2"); }), Errc::MalformedClause);
  EXPECT_EQ(error_of([] { parse_dimacs("p cnf 4 1\n1 2 3 4 0"); }), Errc::ClauseTooWide);
  EXPECT_EQ(error_of([] { parse_dimacs("p cnf 2 1\n0\n"); }), Errc::EmptyClause);
}

TEST(parse_dimacs, comments_duplicates_and_percent_terminator) {
  const auto r = parse_dimacs("c hello\np cnf 3 3\n2 1 0\n1 2 0\n1 1 3 0\n%\n0\n");
  EXPECT_EQ(r.duplicates_merged, 1u);
  EXPECT_EQ(r.formula.num_clauses(), 2u);
  EXPECT_EQ(r.formula.m2(), 2u);  // 1 1 3 collapses to a 2-clause
}

TEST(emit_dimacs, canonical_order) {
  const Formula phi(3, {Clause::of({3, -1, 2}), Clause::of({2}), Clause::of({-2, 1})});
  EXPECT_EQ(emit_dimacs(phi), "p cnf 3 3\n2 0\n1 -2 0\n-1 2 3 0\n");
}

TEST(length, examples) {
  EXPECT_EQ(length(Formula(3, {Clause::of({1, 2, 3})})), 2u);
  EXPECT_EQ(length(Formula(3, {Clause::of({1, -2}), Clause::of({-1, 2, 3})})), 4u);
  const Formula two_two_one_three(
      4, {Clause::of({1, 2}), Clause::of({3, 4}), Clause::of({1, -3, 4})});
  EXPECT_EQ(two_two_one_three.m2(), 2u);
  EXPECT_EQ(two_two_one_three.m3(), 1u);
  EXPECT_EQ(length(two_two_one_three), 6u);
  EXPECT_EQ(length(Formula(3, {})), 0u);
}

TEST(length, matches_two_m2_plus_three_m3_without_units) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Formula phi = oracle::formula_of(6, oracle::random_by_count(rng, 6, 1 + trial % 12, 0, 1, 1));
    if (phi.empty()) continue;
    ASSERT_EQ(phi.m1(), 0u);
    EXPECT_EQ(length(phi), 2 * phi.m2() + 3 * phi.m3() - 1);
  }
}

TEST(reduce, examples) {
  // a=x1, b=x2, c=x3, d=x4
  const Formula f1(4, {Clause::of({1}), Clause::of({1, 2}), Clause::of({3, 4})});
  EXPECT_EQ(reduce(f1), Formula(4, {Clause::of({1}), Clause::of({3, 4})}));

  const Formula free(4, {Clause::of({1, 2}), Clause::of({-1, 3}), Clause::of({2, 3, 4})});
  EXPECT_EQ(reduce(free), free);

  const Formula f3(3, {Clause::of({1, 2}), Clause::of({1, 2, 3}), Clause::of({2, 3})});
  EXPECT_EQ(reduce(f3), Formula(3, {Clause::of({1, 2}), Clause::of({2, 3})}));
}

TEST(reduce, preserves_semantics_and_is_idempotent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + trial % 12;
    const auto cls = oracle::random_by_count(rng, n, 1 + trial % 25);
    const Formula phi = oracle::formula_of(n, cls);
    const Formula r = reduce(phi);
    EXPECT_EQ(reduce(r), r);
    const auto reduced = oracle::clauses_of(r);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      ASSERT_EQ(oracle::eval(reduced, x), oracle::eval(cls, x)) << emit_dimacs(phi);
    }
    // No clause of r strictly contains another.
    for (const auto& a : r.clauses()) {
      for (const auto& b : r.clauses()) {
        if (!(a == b)) EXPECT_FALSE(a.is_subset_of(b));
      }
    }
  }
}

TEST(evaluate, examples) {
  const Formula or12(2, {Clause::of({1, 2})});
  EXPECT_TRUE(evaluate(or12, Assignment{{false, true}}));
  EXPECT_FALSE(evaluate(or12, Assignment{{false, false}}));
  const Formula contra(1, {Clause::of({1}), Clause::of({-1})});
  EXPECT_FALSE(evaluate(contra, Assignment{{false}}));
  EXPECT_FALSE(evaluate(contra, Assignment{{true}}));
  EXPECT_TRUE(evaluate(Formula(3, {}), Assignment::from_mask(3, 5)));
  EXPECT_EQ(error_of([&] { evaluate(or12, Assignment{{true}}); }), Errc::DimensionMismatch);
}

TEST(count_satisfying, examples) {
  EXPECT_EQ(count_satisfying(Formula(2, {Clause::of({1, 2})})), 3u);
  EXPECT_EQ(count_satisfying(Formula(1, {Clause::of({1}), Clause::of({-1})})), 0u);
  EXPECT_EQ(count_satisfying(Formula(3, {})), 8u);
  EXPECT_EQ(error_of([] { count_satisfying(Formula(30, {}), 24); }), Errc::TooManyVariables);
}

TEST(count_satisfying, agrees_with_truth_table_oracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + trial % 10;
    const auto cls = oracle::random_by_count(rng, n, trial % 20);
    const Formula phi = oracle::formula_of(n, cls);
    EXPECT_EQ(count_satisfying(phi), oracle::count(cls, n));
  }
}

TEST(emit_dimacs, round_trip) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + trial % 15;
    const Formula phi = oracle::formula_of(n, oracle::random_by_count(rng, n, trial % 30));
    EXPECT_EQ(parse_dimacs(emit_dimacs(phi)).formula, phi);
  }
}

TEST(clause, construction_rules) {
  EXPECT_FALSE(Clause::from_literals({lit(1), lit(-1)}).has_value());
  EXPECT_EQ(Clause::from_literals({lit(2), lit(2), lit(1)})->size(), 2u);
  EXPECT_EQ(error_of([] { Clause::from_literals(std::initializer_list<Literal>{}); }),
            Errc::EmptyClause);
  EXPECT_EQ(error_of([] { Clause::of({1, 2, 3, 4}); }), Errc::ClauseTooWide);
  EXPECT_EQ(error_of([] { Clause::of({1, -1}); }), Errc::MalformedClause);
  EXPECT_LT(Clause::of({3}), Clause::of({1, 2}));
  EXPECT_LT(Clause::of({1, 2}), Clause::of({1, -2}));
}

TEST(formula, rejects_out_of_range_variable) {
  EXPECT_EQ(error_of([] { Formula(2, {Clause::of({3})}); }), Errc::VariableOutOfRange);
}

TEST(eliminate_units, propagates_and_detects_conflict) {
  const Formula phi(3, {Clause::of({1}), Clause::of({-1, 2}), Clause::of({-2, 3, -1})});
  const auto r = eliminate_units(phi);
  EXPECT_FALSE(r.conflict);
  EXPECT_TRUE(r.formula.empty());
  EXPECT_EQ(r.fixed.size(), 3u);

  const auto c = eliminate_units(Formula(2, {Clause::of({1}), Clause::of({-1, 2}), Clause::of({-2})}));
  EXPECT_TRUE(c.conflict);
  EXPECT_EQ(count_satisfying(c.formula), 0u);
}

TEST(eliminate_units, preserves_satisfiability) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + trial % 8;
    const Formula phi = oracle::formula_of(n, oracle::random_by_count(rng, n, trial % 12, 3, 3, 3));
    const auto r = eliminate_units(phi);
    EXPECT_EQ(count_satisfying(phi) > 0, count_satisfying(r.formula) > 0);
  }
}
