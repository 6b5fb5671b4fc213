#include "cnf2ct/sparsifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <map>

#include "cnf2ct/bounds.hpp"
#include "cnf2ct/error.hpp"

namespace cnf2ct {

ThetaParams::ThetaParams(double theta1, double theta2)
    : theta1_(theta1), theta2_(theta2) {
  if (!(std::isfinite(theta1) && std::isfinite(theta2) && 1.0 <= theta1 &&
        theta1 <= theta2)) {
    throw Error(Errc::InvalidTheta, "need 1 <= theta1 <= theta2, got (" +
                                        std::to_string(theta1) + ", " +
                                        std::to_string(theta2) + ")");
  }
}

std::size_t petal_width(SunflowerKind kind) noexcept {
  return kind == SunflowerKind::TwoOne ? 2 : 3;
}

std::size_t heart_width(SunflowerKind kind) noexcept {
  return kind == SunflowerKind::ThreeTwo ? 2 : 1;
}

std::string to_string(SunflowerKind kind) {
  switch (kind) {
    case SunflowerKind::TwoOne: return "(2,1)";
    case SunflowerKind::ThreeTwo: return "(3,2)";
    case SunflowerKind::ThreeOne: return "(3,1)";
  }
  return "?";
}

namespace {

std::vector<Literal> intersect_members(const Formula& phi,
                                       const std::vector<std::size_t>& ids) {
  const auto& clauses = phi.clauses();
  std::vector<Literal> common(clauses[ids.front()].begin(),
                              clauses[ids.front()].end());
  for (std::size_t id : ids) {
    std::vector<Literal> next;
    std::set_intersection(common.begin(), common.end(), clauses[id].begin(),
                          clauses[id].end(), std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

template <typename Key>
std::optional<SunflowerFind> first_good(
    const Formula& phi, const std::map<Key, std::vector<std::size_t>>& groups,
    SunflowerKind kind, double threshold) {
  for (const auto& [key, ids] : groups) {
    if (static_cast<double>(ids.size()) < threshold) continue;
    auto heart = intersect_members(phi, ids);
    if (heart.size() != heart_width(kind)) continue;
    return SunflowerFind{kind, ids, *Clause::from_literals(heart)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<SunflowerFind> find_good_sunflower(const Formula& phi,
                                                 const ThetaParams& theta) {
  std::map<Literal, std::vector<std::size_t>> two_by_literal;
  std::map<std::pair<Literal, Literal>, std::vector<std::size_t>> three_by_pair;
  std::map<Literal, std::vector<std::size_t>> three_by_literal;

  const auto& clauses = phi.clauses();
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const Clause& c = clauses[i];
    if (c.size() == 2) {
      for (Literal l : c) two_by_literal[l].push_back(i);
    } else if (c.size() == 3) {
      for (Literal l : c) three_by_literal[l].push_back(i);
      three_by_pair[{c[0], c[1]}].push_back(i);
      three_by_pair[{c[0], c[2]}].push_back(i);
      three_by_pair[{c[1], c[2]}].push_back(i);
    }
  }

  if (auto s = first_good(phi, two_by_literal, SunflowerKind::TwoOne,
                          theta.theta1()))
    return s;
  if (auto s = first_good(phi, three_by_pair, SunflowerKind::ThreeTwo,
                          theta.theta1()))
    return s;
  return first_good(phi, three_by_literal, SunflowerKind::ThreeOne,
                    theta.theta2());
}

std::pair<Formula, Formula> split(const Formula& phi, const SunflowerFind& s) {
  const auto& clauses = phi.clauses();
  const std::size_t k = petal_width(s.kind);
  const std::size_t h = heart_width(s.kind);

  if (s.clause_ids.empty() || s.heart.size() != h ||
      !std::is_sorted(s.clause_ids.begin(), s.clause_ids.end()) ||
      std::adjacent_find(s.clause_ids.begin(), s.clause_ids.end()) !=
          s.clause_ids.end() ||
      s.clause_ids.back() >= clauses.size()) {
    throw Error(Errc::InvalidSunflower, "malformed member list or heart");
  }
  for (std::size_t id : s.clause_ids) {
    if (clauses[id].size() != k) {
      throw Error(Errc::InvalidSunflower,
                  "member clause " + std::to_string(id) + " has wrong width");
    }
  }
  auto common = intersect_members(phi, s.clause_ids);
  if (!std::equal(common.begin(), common.end(), s.heart.begin(),
                  s.heart.end())) {
    throw Error(Errc::InvalidSunflower,
                "heart is not the exact intersection of the members");
  }

  std::vector<Clause> heart_side;
  std::vector<Clause> petal_side;
  std::size_t next_member = 0;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (next_member < s.clause_ids.size() && s.clause_ids[next_member] == i) {
      ++next_member;
      std::vector<Literal> petal;
      std::set_difference(clauses[i].begin(), clauses[i].end(),
                          s.heart.begin(), s.heart.end(),
                          std::back_inserter(petal));
      petal_side.push_back(*Clause::from_literals(petal));
    } else {
      heart_side.push_back(clauses[i]);
      petal_side.push_back(clauses[i]);
    }
  }
  heart_side.push_back(s.heart);

  return {reduce(Formula(phi.num_vars(), std::move(heart_side))),
          reduce(Formula(phi.num_vars(), std::move(petal_side)))};
}

std::size_t immigrant_r2(const Formula& node, const Formula& root) {
  std::vector<std::size_t> per_literal(2 * std::size_t{node.num_vars()} + 2, 0);
  std::size_t best = 0;
  for (const Clause& c : node.clauses()) {
    if (c.size() != 2 || root.contains(c)) continue;
    for (Literal l : c) best = std::max(best, ++per_literal[l.encoding()]);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Recursion

namespace {

struct Context {
  const Formula& root;
  const ThetaParams& theta;
  std::size_t node_budget;
  bool record_tree;
  std::size_t parallel_depth;
  std::atomic<std::size_t> nodes{0};
};

struct Subtree {
  std::vector<Formula> leaves;
  RecursionStats stats;
  std::vector<TreeNode> nodes;
};

void merge_stats(RecursionStats& into, const RecursionStats& from) {
  into.node_count += from.node_count;
  into.leaf_count += from.leaf_count;
  into.max_depth = std::max(into.max_depth, from.max_depth);
  into.max_r2 = std::max(into.max_r2, from.max_r2);
  into.immigrant_1_total += from.immigrant_1_total;
  into.immigrant_2_total += from.immigrant_2_total;
  into.petal_steps_per_path_max =
      std::max(into.petal_steps_per_path_max, from.petal_steps_per_path_max);
}

void append_child(Subtree& parent, Subtree&& child) {
  const std::size_t leaf_offset = parent.leaves.size();
  const std::ptrdiff_t node_offset =
      static_cast<std::ptrdiff_t>(parent.nodes.size());
  for (TreeNode& node : child.nodes) {
    node.parent = node.parent < 0 ? 0 : node.parent + node_offset;
    if (node.leaf_index) *node.leaf_index += leaf_offset;
    parent.nodes.push_back(std::move(node));
  }
  for (Formula& leaf : child.leaves) parent.leaves.push_back(std::move(leaf));
  merge_stats(parent.stats, child.stats);
}

Subtree explore(Context& ctx, const Formula& phi, const Formula* parent,
                Branch branch, std::size_t depth, std::size_t petal_steps) {
  if (ctx.nodes.fetch_add(1) + 1 > ctx.node_budget) {
    throw Error(Errc::RecursionBudgetExceeded,
                "more than " + std::to_string(ctx.node_budget) +
                    " recursion nodes");
  }

  Subtree out;
  out.stats.node_count = 1;
  out.stats.max_depth = depth;
  out.stats.max_r2 = immigrant_r2(phi, ctx.root);
  if (parent != nullptr) {
    for (const Clause& c : phi.clauses()) {
      if (c.size() > 2 || parent->contains(c) || ctx.root.contains(c)) continue;
      ++(c.size() == 1 ? out.stats.immigrant_1_total
                       : out.stats.immigrant_2_total);
    }
  }

  TreeNode node;
  node.depth = depth;
  node.branch = branch;
  node.length = length(phi);
  node.num_clauses = phi.num_clauses();
  node.r2 = out.stats.max_r2;

  auto sunflower = find_good_sunflower(phi, ctx.theta);
  if (!sunflower) {
    out.stats.leaf_count = 1;
    out.stats.petal_steps_per_path_max = petal_steps;
    node.leaf_index = 0;
    if (ctx.record_tree) out.nodes.push_back(std::move(node));
    out.leaves.push_back(phi);
    return out;
  }

  node.split_kind = sunflower->kind;
  if (ctx.record_tree) out.nodes.push_back(std::move(node));

  const auto branches = split(phi, *sunflower);
  const Formula& heart_phi = branches.first;
  const Formula& petal_phi = branches.second;
  Subtree heart;
  Subtree petal;
  if (depth < ctx.parallel_depth) {
    auto pending = std::async(std::launch::async, [&, d = depth + 1] {
      return explore(ctx, petal_phi, &phi, Branch::Petal, d, petal_steps + 1);
    });
    heart = explore(ctx, heart_phi, &phi, Branch::Heart, depth + 1, petal_steps);
    petal = pending.get();
  } else {
    heart = explore(ctx, heart_phi, &phi, Branch::Heart, depth + 1, petal_steps);
    petal =
        explore(ctx, petal_phi, &phi, Branch::Petal, depth + 1, petal_steps + 1);
  }
  append_child(out, std::move(heart));
  append_child(out, std::move(petal));
  return out;
}

}  // namespace

SparsifyResult sparsify(const Formula& phi, const ThetaParams& theta,
                        const SparsifyOptions& options) {
  const Formula root = reduce(phi);
  std::size_t parallel_depth = 0;
  while ((std::size_t{1} << parallel_depth) < options.threads) ++parallel_depth;

  Context ctx{root, theta, options.node_budget, options.record_tree,
              parallel_depth};
  Subtree tree = explore(ctx, root, nullptr, Branch::Root, 0, 0);

  return SparsifyResult{std::move(tree.leaves), tree.stats, theta, root,
                        std::move(tree.nodes)};
}

// ---------------------------------------------------------------------------
// Bounds

bool BoundReport::all_hold() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.holds; });
}

BoundReport check_leaf_bounds(const SparsifyResult& r, std::uint32_t n) {
  const double t1 = r.thetas.theta1();
  const double nn = static_cast<double>(n);
  BoundReport report;

  auto add = [&](std::string name, double observed, double bound, bool strict) {
    bool holds = strict ? observed < bound : observed <= bound;
    report.checks.push_back({std::move(name), observed, bound, strict, holds});
  };

  std::size_t max_len = 0;
  for (const Formula& leaf : r.leaves) max_len = std::max(max_len, length(leaf));
  add("leaf_length", static_cast<double>(max_len), eta(r.thetas) * nn, true);

  // gamma is undefined once 1/(4 theta1^2) + 1/theta2 >= 1; the leaf-count
  // bound is then omitted.
  if (gamma_argument(r.thetas) < 1.0) {
    add("log2_leaf_count", std::log2(static_cast<double>(r.stats.leaf_count)),
        gamma(r.thetas) * nn, false);
  }
  add("max_depth", static_cast<double>(r.stats.max_depth), 4.0 * t1 * nn, true);
  add("max_r2", static_cast<double>(r.stats.max_r2), 2.0 * t1 - 1.0, false);
  return report;
}

}  // namespace cnf2ct
