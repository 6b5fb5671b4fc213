#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnf2ct/formula.hpp"

namespace cnf2ct {

/// Sunflower size thresholds, 1 <= theta1 <= theta2. Non-integer values are
/// allowed; "size at least theta" is a real comparison.
class ThetaParams {
 public:
  ThetaParams(double theta1, double theta2);

  double theta1() const noexcept { return theta1_; }
  double theta2() const noexcept { return theta2_; }

  friend bool operator==(const ThetaParams&, const ThetaParams&) = default;

 private:
  double theta1_;
  double theta2_;
};

inline const ThetaParams kReferenceThetas{109.395, 58367.2};

/// (k,h): members have k literals, the heart has h.
enum class SunflowerKind { TwoOne, ThreeTwo, ThreeOne };

std::size_t petal_width(SunflowerKind kind) noexcept;  // k
std::size_t heart_width(SunflowerKind kind) noexcept;  // h
std::string to_string(SunflowerKind kind);

struct SunflowerFind {
  SunflowerKind kind;
  /// Indices into Formula::clauses(), ascending.
  std::vector<std::size_t> clause_ids;
  Clause heart;
};

/// Highest-priority good sunflower: (2,1) before (3,2) before (3,1); within a
/// class the smallest encoded heart wins. Each candidate group is the maximal
/// set of k-clauses sharing the key, kept only if its exact intersection has
/// h literals.
std::optional<SunflowerFind> find_good_sunflower(const Formula& phi,
                                                 const ThetaParams& theta);

/// Heart branch and petal branch, each passed through reduce(). For every x,
/// phi(x) == heart(x) || petal(x).
std::pair<Formula, Formula> split(const Formula& phi, const SunflowerFind& s);

struct RecursionStats {
  std::size_t node_count = 0;
  std::size_t leaf_count = 0;
  std::size_t max_depth = 0;
  /// Max over nodes of the largest number of immigrant 2-clauses sharing a
  /// literal.
  std::size_t max_r2 = 0;
  /// Immigrant clauses newly present at a node but absent from its parent,
  /// summed over all tree edges.
  std::size_t immigrant_1_total = 0;
  std::size_t immigrant_2_total = 0;
  /// Max over root-to-leaf paths of petal branches taken.
  std::size_t petal_steps_per_path_max = 0;
};

enum class Branch { Root, Heart, Petal };

/// One recursion-tree node; nodes are listed in depth-first, heart-first
/// preorder.
struct TreeNode {
  std::ptrdiff_t parent = -1;
  std::size_t depth = 0;
  Branch branch = Branch::Root;
  std::size_t length = 0;
  std::size_t num_clauses = 0;
  std::size_t r2 = 0;
  std::optional<SunflowerKind> split_kind;  // empty for leaves
  std::optional<std::size_t> leaf_index;
};

struct SparsifyOptions {
  std::size_t node_budget = 10'000'000;
  bool record_tree = false;
  /// Worker threads for branch-level parallelism. Output does not depend on it.
  unsigned threads = 1;
};

struct SparsifyResult {
  std::vector<Formula> leaves;
  RecursionStats stats;
  ThetaParams thetas;
  Formula root;  // reduce(input)
  std::vector<TreeNode> tree;  // empty unless record_tree
};

/// Recursive sparsification. The input is reduced first; leaves appear in
/// depth-first order with the heart branch explored before the petal branch.
SparsifyResult sparsify(const Formula& phi, const ThetaParams& theta,
                        const SparsifyOptions& options = {});

/// Largest number of 2-clauses not present in root that share one literal.
std::size_t immigrant_r2(const Formula& node, const Formula& root);

struct BoundCheck {
  std::string name;
  double observed;
  double bound;
  bool strict;  // observed < bound rather than <=
  bool holds;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_hold() const noexcept;
};

/// Leaf length < 2(theta1+theta2) n, log2(leaf count) <= gamma n,
/// depth < 4 theta1 n and max_r2 <= 2 theta1 - 1.
BoundReport check_leaf_bounds(const SparsifyResult& r, std::uint32_t n);

}  // namespace cnf2ct
