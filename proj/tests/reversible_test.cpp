#include "cnf2ct/reversible.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cnf2ct/error.hpp"
#include "oracles.hpp"

using namespace cnf2ct;

namespace {

std::vector<bool> input_bits(const ReversibleCircuit& c, std::uint64_t x) {
  std::vector<bool> bits(c.num_wires(), false);
  for (std::uint32_t i = 0; i < c.n_inputs; ++i) bits[i] = (x >> i) & 1u;
  return bits;
}

// Result wire equals f on every input and the inputs are preserved.
template <typename F>
void expect_diagonal_computes(const ReversibleCircuit& c, F&& f) {
  ASSERT_EQ(c.mode, CircuitMode::Diagonal);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.n_inputs); ++x) {
    const auto in = input_bits(c, x);
    const auto out = simulate_reversible(c, in);
    EXPECT_EQ(out[c.result_wire], f(x)) << "x=" << x;
    for (std::uint32_t i = 0; i < c.n_inputs; ++i) EXPECT_EQ(out[i], in[i]);
  }
}

void expect_tidy_computes(const ReversibleCircuit& c, const oracle::Clauses& cls) {
  ASSERT_EQ(c.mode, CircuitMode::Tidy);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.n_inputs); ++x) {
    for (bool y : {false, true}) {
      auto in = input_bits(c, x);
      in[c.result_wire] = y;
      const auto out = simulate_reversible(c, in);
      auto expect = in;
      expect[c.result_wire] = y != oracle::eval(cls, x);
      ASSERT_EQ(out, expect) << "x=" << x << " y=" << y;
    }
  }
}

bool bit(std::uint64_t x, int var) { return (x >> (var - 1)) & 1u; }

}  // namespace

TEST(compile_literal, examples) {
  const auto pos = compile_literal(lit(1), 2);
  EXPECT_EQ(pos.gates, std::vector<RevGate>{RevGate::cnot(0, 2)});
  EXPECT_EQ(pos.result_wire, 2u);
  EXPECT_EQ(pos.n_ancillas, 1u);

  const auto neg = compile_literal(lit(-2), 2);
  EXPECT_EQ(neg.gates, (std::vector<RevGate>{RevGate::cnot(1, 2), RevGate::not_gate(2)}));
  EXPECT_EQ(neg.result_wire, 2u);

  for (int l : {1, -1, 2, -2, 3, -3}) {
    expect_diagonal_computes(compile_literal(lit(l), 3),
                             [&](std::uint64_t x) { return oracle::literal_value(l, x); });
  }
  EXPECT_THROW(compile_literal(lit(4), 3), Error);
}

TEST(compose_and, two_literals) {
  const auto c = compose_and(compile_literal(lit(1), 2), compile_literal(lit(-2), 2));
  EXPECT_EQ(c.toffoli_count(), 1u);
  EXPECT_EQ(c.n_ancillas, 3u);
  expect_diagonal_computes(c, [](std::uint64_t x) { return bit(x, 1) && !bit(x, 2); });
}

TEST(compose_or, two_literals) {
  const auto a = compile_literal(lit(1), 2);
  const auto b = compile_literal(lit(2), 2);
  const auto c = compose_or(a, b);
  EXPECT_EQ(c.toffoli_count(), 1u);
  EXPECT_EQ(c.count(RevGateKind::Not), 5u);
  EXPECT_EQ(c.count(RevGateKind::Cnot), 2u);
  expect_diagonal_computes(c, [](std::uint64_t x) { return bit(x, 1) || bit(x, 2); });
  // f or f is f.
  expect_diagonal_computes(compose_or(a, a), [](std::uint64_t x) { return bit(x, 1); });
}

TEST(compose, rejects_mismatched_registers) {
  EXPECT_THROW(compose_and(compile_literal(lit(1), 2), compile_literal(lit(1), 3)), Error);
  const auto tidy = make_tidy(compile_literal(lit(1), 2));
  EXPECT_THROW(compose_or(tidy, compile_literal(lit(1), 2)), Error);
}

TEST(compose, truth_tables_up_to_eight_inputs) {
  std::mt19937_64 rng(31);
  for (unsigned n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto c1 = oracle::random_clause(rng, n, 1);
      const auto c2 = oracle::random_clause(rng, n, 1);
      const auto c3 = oracle::random_clause(rng, n, 1);
      const auto u1 = compose_or(compile_literal(lit(c1[0]), n), compile_literal(lit(c2[0]), n));
      const auto u2 = compose_not(compile_literal(lit(c3[0]), n));
      expect_diagonal_computes(compose_and(u1, u2), [&](std::uint64_t x) {
        return (oracle::literal_value(c1[0], x) || oracle::literal_value(c2[0], x)) &&
               !oracle::literal_value(c3[0], x);
      });
      expect_diagonal_computes(compose_or(u1, u2), [&](std::uint64_t x) {
        return oracle::literal_value(c1[0], x) || oracle::literal_value(c2[0], x) ||
               !oracle::literal_value(c3[0], x);
      });
    }
  }
}

TEST(compose_not, involution_and_counts) {
  const auto f = compose_and(compile_literal(lit(1), 2), compile_literal(lit(2), 2));
  const auto nn = compose_not(compose_not(f));
  EXPECT_EQ(nn.toffoli_count(), f.toffoli_count());
  EXPECT_EQ(nn.n_ancillas, f.n_ancillas);
  EXPECT_EQ(nn.gates.size(), f.gates.size() + 2);
  EXPECT_EQ(nn.gates.back(), RevGate::not_gate(f.result_wire));
  expect_diagonal_computes(nn, [](std::uint64_t x) { return bit(x, 1) && bit(x, 2); });
  expect_diagonal_computes(compose_not(compile_literal(lit(-1), 1)),
                           [](std::uint64_t x) { return bit(x, 1); });
}

TEST(make_tidy, literal_and_counts) {
  const auto t = make_tidy(compile_literal(lit(-1), 2));
  EXPECT_EQ(t.toffoli_count(), 0u);
  expect_tidy_computes(t, {{-1}});
  const auto d = compose_or(compile_literal(lit(1), 2), compile_literal(lit(2), 2));
  EXPECT_EQ(make_tidy(d).toffoli_count(), 2 * d.toffoli_count());
}

TEST(compile_formula, examples) {
  const Formula one(2, {Clause::of({1, 2})});
  const auto c1 = compile_formula(one);
  EXPECT_EQ(c1.toffoli_count(), 2u);
  expect_tidy_computes(c1, {{1, 2}});

  const Formula two(3, {Clause::of({1, 2}), Clause::of({-1, 3})});
  ASSERT_EQ(length(two), 3u);
  EXPECT_EQ(compile_formula(two).toffoli_count(), 6u);
  EXPECT_EQ(compile_formula_diagonal(two).toffoli_count(), 3u);

  EXPECT_THROW(compile_formula(Formula(2, {})), Error);
}

TEST(compile_formula, layout_and_resources) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 1 + trial % 6;
    const Formula phi = oracle::formula_of(n, oracle::random_by_length(rng, n, trial % 11));
    if (phi.empty()) continue;
    const auto c = compile_formula(phi);
    const std::size_t len = length(phi);
    EXPECT_EQ(c.toffoli_count(), 2 * len);
    EXPECT_EQ(c.n_ancillas, 2 * len + 1);
    EXPECT_EQ(c.result_wire, c.n_inputs + c.n_ancillas);
    EXPECT_EQ(c.wire_kind(0), WireKind::Input);
    EXPECT_EQ(c.wire_kind(n), WireKind::Ancilla);
    EXPECT_EQ(c.wire_kind(c.result_wire), WireKind::Output);
    for (const auto& g : c.gates) EXPECT_GE(g.target(), n);
  }
}

TEST(compile_formula, tidy_semantics_random) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 1 + trial % 6;
    const auto cls = oracle::random_by_length(rng, n, trial % 11);
    const Formula phi = oracle::formula_of(n, cls);
    if (phi.empty()) continue;
    expect_tidy_computes(compile_formula(phi), cls);
  }
}

TEST(simulate_reversible, elementary_gates) {
  ReversibleCircuit c;
  c.n_inputs = 0;
  c.n_ancillas = 3;
  c.gates = {RevGate::not_gate(0)};
  EXPECT_EQ(simulate_reversible(c, {false, false, false}), (std::vector<bool>{true, false, false}));
  c.gates = {RevGate::toffoli(0, 1, 2)};
  EXPECT_EQ(simulate_reversible(c, {true, true, false}), (std::vector<bool>{true, true, true}));
  c.gates = {RevGate::cnot(0, 1)};
  EXPECT_EQ(simulate_reversible(c, {true, false, false}), (std::vector<bool>{true, true, false}));
  EXPECT_THROW(simulate_reversible(c, {true}), Error);
}

TEST(reversed, undoes_the_circuit) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 2 + trial % 4;
    const Formula phi = oracle::formula_of(n, oracle::random_by_length(rng, n, 1 + trial % 7));
    if (phi.empty()) continue;
    const auto c = compile_formula_diagonal(phi);
    const auto r = reversed(c);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int k = 0; k < 20; ++k) {
      std::vector<bool> bits(c.num_wires());
      for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = coin(rng);
      EXPECT_EQ(simulate_reversible(r, simulate_reversible(c, bits)), bits);
    }
  }
}

TEST(serialize, round_trip_and_format) {
  const auto c = compile_formula(Formula(2, {Clause::of({1, -2})}));
  const std::string text = serialize(c);
  EXPECT_EQ(parse_reversible(text), c);
  EXPECT_NE(text.find("TOF "), std::string::npos);
  EXPECT_NE(text.find("CNOT "), std::string::npos);
  EXPECT_NE(text.find("NOT "), std::string::npos);
  EXPECT_THROW(parse_reversible("mode tidy\nbogus 1\n"), Error);
}
