#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "anclab/approx.hpp"
#include "anclab/generate.hpp"
#include "anclab/interval.hpp"
#include "anclab/tree.hpp"

using namespace anclab;

namespace {

/// Child order that shuffles deterministically from a seed.
ChildOrder shuffled_order(std::uint64_t seed) {
  return [seed](const RootedTree& tree, NodeId u) {
    auto span = tree.children(u);
    std::vector<NodeId> kids(span.begin(), span.end());
    SplitMix64 rng(seed ^ (0x9E3779B97F4A7C15ull * (u + 1)));
    for (std::size_t i = kids.size(); i > 1; --i)
      std::swap(kids[i - 1], kids[rng.below(i)]);
    return kids;
  };
}

bool all_validators_pass(const RootedTree& tree, const AssignResult& r) {
  return check_left_including(tree, r.ia).ok &&
         check_necessary_conditions(tree, r.ia).all_pass() &&
         check_sufficient_conditions(tree, r.ia).all_pass() &&
         check_extrema(tree, r.ia).ok && check_basic_property(tree, r.ia, r.order).ok;
}

}  // namespace

TEST_CASE("assign reproduces the hand-traced small cases") {
  SECTION("path of 3, tight b, any order") {
    const RootedTree t(std::vector<NodeId>{0, 1});
    const AssignResult r = assign(t, child_order::ascending_id, b_choice::tight);
    CHECK(r.ia.a == std::vector<std::uint64_t>{0, 1, 2});
    CHECK(r.ia.b == std::vector<std::uint64_t>{2, 2, 2});
    CHECK(r.ia.a_bar == std::vector<std::uint64_t>{2, 2, 2});
    CHECK(r.ia.b_bar == std::vector<std::uint64_t>{2, 2, 2});
  }
  SECTION("star with 2 leaves, tight b") {
    const RootedTree t(std::vector<NodeId>{0, 0});
    const AssignResult r = assign(t, child_order::ascending_id, b_choice::tight);
    CHECK(r.ia.a == std::vector<std::uint64_t>{0, 1, 2});
    CHECK(r.ia.b == std::vector<std::uint64_t>{2, 1, 2});
  }
  SECTION("single node with start offset") {
    const RootedTree t{std::vector<NodeId>{}};
    const AssignResult r = assign(t, child_order::ascending_id, b_choice::tight, 5);
    CHECK(r.ia.a == std::vector<std::uint64_t>{5});
    CHECK(r.ia.b == std::vector<std::uint64_t>{5});
    CHECK(r.ia.a_bar == std::vector<std::uint64_t>{5});
    CHECK(r.ia.b_bar == std::vector<std::uint64_t>{5});
  }
  SECTION("start shifts every value uniformly") {
    const RootedTree t(std::vector<NodeId>{0, 1});
    const AssignResult base = assign(t, child_order::ascending_id, b_choice::tight, 0);
    const AssignResult moved = assign(t, child_order::ascending_id, b_choice::tight, 10);
    for (NodeId u = 0; u < t.size(); ++u) {
      CHECK(moved.ia.a[u] == base.ia.a[u] + 10);
      CHECK(moved.ia.b[u] == base.ia.b[u] + 10);
    }
  }
}

TEST_CASE("assign records the processing order it used") {
  const RootedTree t(std::vector<NodeId>{0, 0, 0});
  const AssignResult asc = assign(t, child_order::ascending_id, b_choice::tight);
  const auto k1 = asc.order.children(0);
  CHECK(std::vector<NodeId>(k1.begin(), k1.end()) == std::vector<NodeId>{1, 2, 3});
  const AssignResult desc = assign(t, child_order::descending_id, b_choice::tight);
  const auto k2 = desc.order.children(0);
  CHECK(std::vector<NodeId>(k2.begin(), k2.end()) == std::vector<NodeId>{3, 2, 1});
}

TEST_CASE("assign rejects broken strategies") {
  const RootedTree t(std::vector<NodeId>{0, 1});
  SECTION("b below a_bar") {
    const BChoice bad = [](NodeId, std::uint64_t, std::uint64_t a_bar) { return a_bar - 1; };
    CHECK_THROWS_AS(assign(t, child_order::ascending_id, bad), StrategyViolation);
  }
  SECTION("order that is not a permutation") {
    const ChildOrder missing = [](const RootedTree&, NodeId) { return std::vector<NodeId>{}; };
    CHECK_THROWS_AS(assign(t, missing, b_choice::tight), StrategyViolation);
    const ChildOrder wrong = [](const RootedTree& tree, NodeId u) {
      std::vector<NodeId> kids(tree.children(u).begin(), tree.children(u).end());
      for (auto& k : kids) k = 0;
      return kids;
    };
    CHECK_THROWS_AS(assign(t, wrong, b_choice::tight), StrategyViolation);
  }
}

TEST_CASE("assign survives a deep path") {
  const std::size_t n = 300000;
  std::vector<NodeId> parents(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) parents[i] = i;
  const RootedTree t(std::move(parents));
  const AssignResult r = assign(t, child_order::ascending_id, b_choice::tight);
  CHECK(r.ia.a[n - 1] == n - 1);
  CHECK(r.ia.b_bar[0] == n - 1);
}

TEST_CASE("validators accept every strategy combination on small trees") {
  const std::vector<ChildOrder> orders{child_order::ascending_id, child_order::descending_id,
                                       child_order::by_subtree_size, shuffled_order(99)};
  for (std::size_t n = 1; n <= 6; ++n) {
    const unsigned z = clamped_ceil_lg(n);
    TreeEnumerator trees(n);
    while (auto t = trees.next()) {
      for (const ChildOrder& order : orders) {
        CHECK(all_validators_pass(*t, assign(*t, order, b_choice::tight)));
        CHECK(all_validators_pass(*t, assign(*t, order, make_approx_b_choice(z))));
      }
    }
  }
}

TEST_CASE("check_left_including spots a too-short root interval") {
  const RootedTree t(std::vector<NodeId>{0, 1});
  AssignResult r = assign(t, child_order::ascending_id, b_choice::tight);
  r.ia.b[0] = 1;  // root interval [0,1] misses a(2) = 2
  const CheckResult c = check_left_including(t, r.ia);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.witness.empty());
}

TEST_CASE("necessary conditions flag an injected b < a_bar") {
  const RootedTree t(std::vector<NodeId>{0, 0, 1});
  AssignResult r = assign(t, child_order::ascending_id, b_choice::tight);
  r.ia.b[1] = r.ia.a_bar[1] - 1;
  const AssignmentReport rep = check_necessary_conditions(t, r.ia);
  CHECK_FALSE(rep.conditions[0].pass);
  CHECK(rep.conditions[0].witness.find("node 1") != std::string::npos);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("sufficient conditions flag overlapping sibling spans") {
  // Star of 3: hand-build sibling intervals that overlap.
  const RootedTree t(std::vector<NodeId>{0, 0});
  IntervalAssignment ia;
  ia.a = {0, 1, 2};
  ia.b = {3, 2, 3};  // [a(1), b_bar(1)] = [1,2] meets [a(2), b_bar(2)] = [2,3]
  ia.a_bar = {2, 1, 2};
  ia.b_bar = {3, 2, 3};
  const AssignmentReport rep = check_sufficient_conditions(t, ia);
  CHECK(rep.conditions[0].pass);
  CHECK(rep.conditions[1].pass);
  CHECK_FALSE(rep.conditions[2].pass);
}

TEST_CASE("sufficient conditions ignore stale stored extrema") {
  // Legal (a, b) with deliberately garbage stored a_bar/b_bar: the
  // implication must judge the assignment, not the bookkeeping.
  const RootedTree t(std::vector<NodeId>{0});
  IntervalAssignment ia;
  ia.a = {0, 1};
  ia.b = {1, 5};
  ia.a_bar = {77, 88};
  ia.b_bar = {0, 0};
  CHECK(check_sufficient_conditions(t, ia).all_pass());
  CHECK(check_left_including(t, ia).ok);
  CHECK_FALSE(check_extrema(t, ia).ok);
}

TEST_CASE("recompute_extrema matches the definition") {
  const RootedTree t(std::vector<NodeId>{0, 1});
  const AssignResult r = assign(t, child_order::ascending_id, b_choice::tight);
  const auto [a_bar, b_bar] = recompute_extrema(t, r.ia);
  CHECK(a_bar == std::vector<std::uint64_t>{2, 2, 2});
  CHECK(b_bar == std::vector<std::uint64_t>{2, 2, 2});
  SECTION("on a star") {
    const RootedTree s(std::vector<NodeId>{0, 0});
    const AssignResult rs = assign(s, child_order::ascending_id, b_choice::tight);
    const auto [sa, sb] = recompute_extrema(s, rs.ia);
    CHECK(sa[0] == 2);
    CHECK(sb[0] == 2);
  }
}

TEST_CASE("check_basic_property is order-sensitive") {
  // Root 0 with a leaf child 1 and a two-node child 2 -> 3.
  const RootedTree t(std::vector<NodeId>{0, 0, 2});
  const AssignResult r = assign(t, child_order::ascending_id, b_choice::tight);
  CHECK(check_basic_property(t, r.ia, r.order).ok);
  // The same assignment judged against the reversed order must fail.
  const AssignResult other = assign(t, child_order::descending_id, b_choice::tight);
  CHECK(check_basic_property(t, other.ia, other.order).ok);
  CHECK_FALSE(check_basic_property(t, r.ia, other.order).ok);
}

TEST_CASE("condition implications hold on perturbed assignments") {
  // Perturb valid assignments and assert both one-way implications:
  // sufficient conditions imply left-inclusion; left-inclusion implies
  // the necessary conditions. Premise-false cases pass vacuously.
  std::uint64_t suff_cases = 0;
  std::uint64_t li_cases = 0;
  SplitMix64 rng(2024);
  for (std::size_t n = 2; n <= 6; ++n) {
    TreeEnumerator trees(n);
    while (auto t = trees.next()) {
      for (int round = 0; round < 8; ++round) {
        AssignResult r = assign(*t, shuffled_order(rng.next()), b_choice::tight);
        const int edits = static_cast<int>(rng.below(3));
        for (int e = 0; e < edits; ++e) {
          const NodeId u = static_cast<NodeId>(rng.below(n));
          auto& field = rng.below(2) ? r.ia.a[u] : r.ia.b[u];
          field = rng.below(2) && field > 0 ? field - 1 : field + 1;
        }
        const bool li = check_left_including(*t, r.ia).ok;
        const bool suff = check_sufficient_conditions(*t, r.ia).all_pass();
        const bool nec = check_necessary_conditions(*t, r.ia).all_pass();
        if (suff) {
          ++suff_cases;
          CHECK(li);
        }
        if (li) {
          ++li_cases;
          CHECK(nec);
        }
      }
    }
  }
  // Make sure the premises actually fired.
  CHECK(suff_cases > 100);
  CHECK(li_cases > 100);
}
