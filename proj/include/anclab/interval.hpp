#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "anclab/errors.hpp"
#include "anclab/tree.hpp"

namespace anclab {

/// Per-node interval data: I(u) = [a(u), b(u)] plus the subtree maxima
/// a_bar(u) = max_{v in T_u} a(v) and b_bar(u) = max_{v in T_u} b(v).
struct IntervalAssignment {
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
  std::vector<std::uint64_t> a_bar;
  std::vector<std::uint64_t> b_bar;

  std::size_t size() const { return a.size(); }

  /// True iff x falls inside I(u).
  bool contains(NodeId u, std::uint64_t x) const { return a[u] <= x && x <= b[u]; }

  friend bool operator==(const IntervalAssignment&, const IntervalAssignment&) = default;
};

/// The child processing order actually used by `assign`, stored per node.
/// Needed afterwards because the basic-property check is order-dependent.
class ProcessingOrder {
 public:
  ProcessingOrder() = default;
  ProcessingOrder(std::vector<std::size_t> offsets, std::vector<NodeId> flat)
      : off_(std::move(offsets)), flat_(std::move(flat)) {}

  std::span<const NodeId> children(NodeId u) const {
    return {flat_.data() + off_[u], off_[u + 1] - off_[u]};
  }

 private:
  std::vector<std::size_t> off_;
  std::vector<NodeId> flat_;
};

/// Strategy: the order in which a node's children are processed.
/// Must return a permutation of tree.children(u).
using ChildOrder = std::function<std::vector<NodeId>(const RootedTree&, NodeId)>;

/// Strategy: choose b(u) from (u, a(u), a_bar(u)) after all children of u
/// are done. Contract: the result must be >= a_bar(u).
using BChoice = std::function<std::uint64_t(NodeId, std::uint64_t, std::uint64_t)>;

namespace child_order {

inline std::vector<NodeId> ascending_id(const RootedTree& tree, NodeId u) {
  auto span = tree.children(u);
  return {span.begin(), span.end()};
}

inline std::vector<NodeId> descending_id(const RootedTree& tree, NodeId u) {
  auto span = tree.children(u);
  std::vector<NodeId> out(span.begin(), span.end());
  std::reverse(out.begin(), out.end());
  return out;
}

inline std::vector<NodeId> by_subtree_size(const RootedTree& tree, NodeId u) {
  return children_by_subtree_size(tree, u);
}

}  // namespace child_order

namespace b_choice {

/// The classic choice: b(u) = a_bar(u), the tightest admissible value.
inline std::uint64_t tight(NodeId, std::uint64_t, std::uint64_t a_bar) { return a_bar; }

}  // namespace b_choice

struct AssignResult {
  IntervalAssignment ia;
  ProcessingOrder order;
};

/// The generic interval-assignment procedure.
///
/// Equivalent to the recursive formulation Assign(u, t):
///   (a, a_bar, b, b_bar)(u) <- (t, t, t, t)
///   for each child v in strategy order:
///     Assign(v, b_bar(u) + 1); (a_bar, b_bar)(u) <- (a_bar, b_bar)(v)
///   b(u) <- choose_b(u, a(u), a_bar(u))   [must be >= a_bar(u)]
///   b_bar(u) <- max{b(u), b_bar(u)}
///
/// Runs on an explicit stack so path-shaped trees of 10^6 nodes are fine.
inline AssignResult assign(const RootedTree& tree, const ChildOrder& order_of,
                           const BChoice& choose_b, std::uint64_t start = 0) {
  const std::size_t n = tree.size();

  // Materialize and validate the processing order up front.
  std::vector<std::size_t> off(n + 1, 0);
  std::vector<NodeId> flat;
  flat.reserve(n - 1);
  for (NodeId u = 0; u < n; ++u) {
    std::vector<NodeId> kids = order_of(tree, u);
    auto expected = tree.children(u);
    std::vector<NodeId> sorted(kids.begin(), kids.end());
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), expected.begin(), expected.end()))
      throw StrategyViolation("child order for node " + std::to_string(u) +
                              " is not a permutation of its children");
    flat.insert(flat.end(), kids.begin(), kids.end());
    off[u + 1] = flat.size();
  }
  ProcessingOrder order(std::move(off), std::move(flat));

  IntervalAssignment ia;
  ia.a.resize(n);
  ia.b.resize(n);
  ia.a_bar.resize(n);
  ia.b_bar.resize(n);

  auto init = [&](NodeId u, std::uint64_t t) {
    ia.a[u] = ia.a_bar[u] = ia.b[u] = ia.b_bar[u] = t;
  };

  struct Frame {
    NodeId u;
    std::size_t next_child;
  };
  std::vector<Frame> stack;
  stack.push_back({RootedTree::root(), 0});
  init(RootedTree::root(), start);

  while (!stack.empty()) {
    Frame& f = stack.back();
    auto kids = order.children(f.u);
    if (f.next_child < kids.size()) {
      const NodeId v = kids[f.next_child++];
      init(v, ia.b_bar[f.u] + 1);
      stack.push_back({v, 0});
      continue;
    }
    // All children of f.u are done; pick b(u) and fold into the parent.
    const NodeId u = f.u;
    ia.b[u] = choose_b(u, ia.a[u], ia.a_bar[u]);
    if (ia.b[u] < ia.a_bar[u])
      throw StrategyViolation("choose_b returned " + std::to_string(ia.b[u]) + " < a_bar = " +
                              std::to_string(ia.a_bar[u]) + " at node " + std::to_string(u));
    ia.b_bar[u] = std::max(ia.b[u], ia.b_bar[u]);
    stack.pop_back();
    if (!stack.empty()) {
      const NodeId p = stack.back().u;
      ia.a_bar[p] = ia.a_bar[u];
      ia.b_bar[p] = ia.b_bar[u];
    }
  }
  return {std::move(ia), std::move(order)};
}

/// Boolean verdict plus a human-readable first violation.
struct CheckResult {
  bool ok = true;
  std::string witness;

  explicit operator bool() const { return ok; }
};

inline CheckResult check_pass() { return {true, {}}; }
inline CheckResult check_fail(std::string w) { return {false, std::move(w)}; }

/// Per-condition outcome of a validator.
struct AssignmentReport {
  struct Condition {
    std::string name;
    bool pass = true;
    std::string witness;
  };
  std::vector<Condition> conditions;

  bool all_pass() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const Condition& c) { return c.pass; });
  }

  std::string first_witness() const {
    for (const auto& c : conditions)
      if (!c.pass) return c.name + ": " + c.witness;
    return {};
  }
};

/// True subtree maxima of a and b, computed directly. Because parents have
/// smaller ids than their children, a single descending fold suffices.
inline std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> recompute_extrema(
    const RootedTree& tree, const IntervalAssignment& ia) {
  const std::size_t n = tree.size();
  std::vector<std::uint64_t> a_bar(ia.a);
  std::vector<std::uint64_t> b_bar(ia.b);
  for (std::size_t i = n - 1; i >= 1; --i) {
    const NodeId p = tree.parent(i);
    a_bar[p] = std::max(a_bar[p], a_bar[i]);
    b_bar[p] = std::max(b_bar[p], b_bar[i]);
  }
  return {std::move(a_bar), std::move(b_bar)};
}

/// Compares stored a_bar/b_bar against recomputed ground truth.
inline CheckResult check_extrema(const RootedTree& tree, const IntervalAssignment& ia) {
  auto [a_bar, b_bar] = recompute_extrema(tree, ia);
  for (NodeId u = 0; u < tree.size(); ++u) {
    if (ia.a_bar[u] != a_bar[u])
      return check_fail("a_bar(" + std::to_string(u) + ") = " + std::to_string(ia.a_bar[u]) +
                        ", subtree max of a is " + std::to_string(a_bar[u]));
    if (ia.b_bar[u] != b_bar[u])
      return check_fail("b_bar(" + std::to_string(u) + ") = " + std::to_string(ia.b_bar[u]) +
                        ", subtree max of b is " + std::to_string(b_bar[u]));
  }
  return check_pass();
}

/// Ground-truth check of the left-including property:
/// for all ordered pairs (u, v): u is an ancestor of v  <=>  a(v) in I(u).
/// Quadratic by design; this is the definition, not an optimized query.
inline CheckResult check_left_including(const RootedTree& tree, const IntervalAssignment& ia) {
  const std::size_t n = tree.size();
  const AncestorMatrix anc(tree);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      const bool truth = anc(u, v);
      const bool claimed = ia.contains(u, ia.a[v]);
      if (truth != claimed)
        return check_fail("pair (u=" + std::to_string(u) + ", v=" + std::to_string(v) +
                          "): ancestor = " + (truth ? "true" : "false") + " but a(v) = " +
                          std::to_string(ia.a[v]) + (claimed ? " inside " : " outside ") + "[" +
                          std::to_string(ia.a[u]) + ", " + std::to_string(ia.b[u]) + "]");
    }
  }
  return check_pass();
}

namespace detail {

/// Checks that the union of {[a(v), b(v)] : v in T_u} is exactly
/// [a(u), b_bar(u)]: intervals sorted by lower end must start at a(u),
/// stay within bounds, and leave no gaps up to b_bar(u).
inline CheckResult union_covers(const RootedTree& tree, const IntervalAssignment& ia, NodeId u,
                                std::uint64_t true_b_bar) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ivs;
  std::vector<NodeId> stack{u};
  while (!stack.empty()) {
    const NodeId w = stack.back();
    stack.pop_back();
    ivs.emplace_back(ia.a[w], ia.b[w]);
    auto kids = tree.children(w);
    stack.insert(stack.end(), kids.begin(), kids.end());
  }
  std::sort(ivs.begin(), ivs.end());
  const std::uint64_t lo = ia.a[u];
  if (ivs.front().first != lo)
    return check_fail("node " + std::to_string(u) + ": smallest descendant a is " +
                      std::to_string(ivs.front().first) + ", expected a(u) = " +
                      std::to_string(lo));
  std::uint64_t covered = ivs.front().second;
  for (std::size_t i = 1; i < ivs.size(); ++i) {
    if (ivs[i].first > covered + 1)
      return check_fail("node " + std::to_string(u) + ": gap between " + std::to_string(covered) +
                        " and " + std::to_string(ivs[i].first) + " inside [a(u), b_bar(u)]");
    covered = std::max(covered, ivs[i].second);
  }
  if (covered != true_b_bar)
    return check_fail("node " + std::to_string(u) + ": union of descendant intervals ends at " +
                      std::to_string(covered) + ", b_bar(u) = " + std::to_string(true_b_bar));
  return check_pass();
}

}  // namespace detail

/// The four conditions every left-including assignment satisfies:
///   1. b(u) >= a_bar(u) for every u
///   2. a(v) > a(u) for every proper descendant v of u
///   3. the union of [a(v), b(v)] over v in T_u equals [a(u), b_bar(u)]
///   4. [a(u), b_bar(u)] and [a(v), b_bar(v)] are disjoint for incomparable u, v
/// Extrema are recomputed internally, so the report is meaningful even for
/// hand-built assignments with stale a_bar/b_bar fields.
inline AssignmentReport check_necessary_conditions(const RootedTree& tree,
                                                   const IntervalAssignment& ia) {
  const std::size_t n = tree.size();
  auto [a_bar, b_bar] = recompute_extrema(tree, ia);
  const AncestorMatrix anc(tree);
  AssignmentReport report;
  report.conditions.resize(4);
  auto& c1 = report.conditions[0];
  auto& c2 = report.conditions[1];
  auto& c3 = report.conditions[2];
  auto& c4 = report.conditions[3];
  c1.name = "b >= a_bar";
  c2.name = "descendant a strictly larger";
  c3.name = "descendant intervals cover [a, b_bar]";
  c4.name = "incomparable [a, b_bar] disjoint";

  for (NodeId u = 0; u < n && c1.pass; ++u) {
    if (ia.b[u] < a_bar[u]) {
      c1.pass = false;
      c1.witness = "node " + std::to_string(u) + ": b = " + std::to_string(ia.b[u]) +
                   " < a_bar = " + std::to_string(a_bar[u]);
    }
  }

  for (NodeId u = 0; u < n && c2.pass; ++u) {
    for (NodeId v = 0; v < n && c2.pass; ++v) {
      if (u == v || !anc(u, v)) continue;
      if (ia.a[v] <= ia.a[u]) {
        c2.pass = false;
        c2.witness = "descendant v=" + std::to_string(v) + " of u=" + std::to_string(u) +
                     " has a(v) = " + std::to_string(ia.a[v]) +
                     " <= a(u) = " + std::to_string(ia.a[u]);
      }
    }
  }

  for (NodeId u = 0; u < n && c3.pass; ++u) {
    CheckResult r = detail::union_covers(tree, ia, u, b_bar[u]);
    if (!r.ok) {
      c3.pass = false;
      c3.witness = r.witness;
    }
  }

  for (NodeId u = 0; u < n && c4.pass; ++u) {
    for (NodeId v = u + 1; v < n && c4.pass; ++v) {
      if (anc(u, v) || anc(v, u)) continue;
      const bool overlap = ia.a[u] <= b_bar[v] && ia.a[v] <= b_bar[u];
      if (overlap) {
        c4.pass = false;
        c4.witness = "incomparable u=" + std::to_string(u) + ", v=" + std::to_string(v) +
                     ": [" + std::to_string(ia.a[u]) + ", " + std::to_string(b_bar[u]) +
                     "] meets [" + std::to_string(ia.a[v]) + ", " + std::to_string(b_bar[v]) +
                     "]";
      }
    }
  }
  return report;
}

/// The three conditions that together imply the left-including property:
///   i.   b(u) >= a_bar(u) for every u
///   ii.  a(v) > a(u) for every child v of u
///   iii. for every node, the children's [a(v), b_bar(v)] are pairwise disjoint
/// As above, extrema are recomputed rather than trusted.
inline AssignmentReport check_sufficient_conditions(const RootedTree& tree,
                                                    const IntervalAssignment& ia) {
  const std::size_t n = tree.size();
  auto [a_bar, b_bar] = recompute_extrema(tree, ia);
  AssignmentReport report;
  report.conditions.resize(3);
  auto& c1 = report.conditions[0];
  auto& c2 = report.conditions[1];
  auto& c3 = report.conditions[2];
  c1.name = "b >= a_bar";
  c2.name = "child a strictly larger";
  c3.name = "sibling [a, b_bar] disjoint";

  for (NodeId u = 0; u < n && c1.pass; ++u) {
    if (ia.b[u] < a_bar[u]) {
      c1.pass = false;
      c1.witness = "node " + std::to_string(u) + ": b = " + std::to_string(ia.b[u]) +
                   " < a_bar = " + std::to_string(a_bar[u]);
    }
  }

  for (NodeId v = 1; v < n && c2.pass; ++v) {
    const NodeId u = tree.parent(v);
    if (ia.a[v] <= ia.a[u]) {
      c2.pass = false;
      c2.witness = "child v=" + std::to_string(v) + " of u=" + std::to_string(u) + " has a(v) = " +
                   std::to_string(ia.a[v]) + " <= a(u) = " + std::to_string(ia.a[u]);
    }
  }

  for (NodeId u = 0; u < n && c3.pass; ++u) {
    auto kids = tree.children(u);
    std::vector<NodeId> by_a(kids.begin(), kids.end());
    std::sort(by_a.begin(), by_a.end(),
              [&](NodeId x, NodeId y) { return ia.a[x] < ia.a[y]; });
    for (std::size_t i = 1; i < by_a.size(); ++i) {
      const NodeId x = by_a[i - 1];
      const NodeId y = by_a[i];
      if (ia.a[y] <= b_bar[x]) {
        c3.pass = false;
        c3.witness = "siblings " + std::to_string(x) + " and " + std::to_string(y) + ": [" +
                     std::to_string(ia.a[x]) + ", " + std::to_string(b_bar[x]) + "] meets [" +
                     std::to_string(ia.a[y]) + ", " + std::to_string(b_bar[y]) + "]";
        break;
      }
    }
  }
  return report;
}

/// Size bookkeeping of the assignment relative to a processing order.
/// For every internal u with children v_1..v_k in processing order:
///   1. b_bar(v_k) - a(u) + 1  =  sum_i (b_bar(v_i) - a(v_i) + 1) + 1
///   2. a_bar(u) - a(u) + 1  =  (a_bar(v_k) - a(v_k) + 1)
///                              + sum_{i<k} (b_bar(v_i) - a(v_i) + 1) + 1
/// Property 1 is stated on b_bar(v_k), the subtree b-maximum before b(u)
/// itself is folded in, so it holds for every admissible b-choice.
inline CheckResult check_basic_property(const RootedTree& tree, const IntervalAssignment& ia,
                                        const ProcessingOrder& order) {
  for (NodeId u = 0; u < tree.size(); ++u) {
    auto kids = order.children(u);
    if (kids.empty()) continue;
    const NodeId last = kids.back();
    std::uint64_t sum_all = 0;
    for (NodeId v : kids) sum_all += ia.b_bar[v] - ia.a[v] + 1;
    const std::uint64_t lhs1 = ia.b_bar[last] - ia.a[u] + 1;
    if (lhs1 != sum_all + 1)
      return check_fail("node " + std::to_string(u) + ": b_bar(v_k) - a(u) + 1 = " +
                        std::to_string(lhs1) + " but child spans sum to " +
                        std::to_string(sum_all + 1));
    std::uint64_t sum_prefix = sum_all - (ia.b_bar[last] - ia.a[last] + 1);
    const std::uint64_t lhs2 = ia.a_bar[u] - ia.a[u] + 1;
    const std::uint64_t rhs2 = (ia.a_bar[last] - ia.a[last] + 1) + sum_prefix + 1;
    if (lhs2 != rhs2)
      return check_fail("node " + std::to_string(u) + ": a_bar(u) - a(u) + 1 = " +
                        std::to_string(lhs2) + " but expected " + std::to_string(rhs2));
  }
  return check_pass();
}

}  // namespace anclab
