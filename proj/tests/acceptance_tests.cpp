// Acceptance suite: ten end-to-end criteria, one [PASS]/[FAIL] line each.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "anclab/anclab.hpp"

using namespace anclab;

namespace {

void print_line(int idx, const std::string& name, bool pass) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " C" << idx << " " << name << std::endl;
}

const std::vector<std::uint64_t>& size_sweep() {
  static const std::vector<std::uint64_t> sizes{2,    3,     4,      10,     100,
                                                1000, 10000, 100000, 1000000};
  return sizes;
}

/// The randomized tree population of criterion 4: twenty seeded trees per
/// size, half attach and half prufer.
std::vector<GenSpec> random_specs(std::uint64_t n) {
  std::vector<GenSpec> specs;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    specs.push_back({TreeKind::Attach, n, seed});
    specs.push_back({TreeKind::Prufer, n, seed});
  }
  return specs;
}

bool decode_matches_oracle_all_pairs(const RootedTree& tree, const std::vector<Label>& classic,
                                     const std::vector<Label>& approx) {
  const AncestorMatrix anc(tree);
  const std::size_t n = tree.size();
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v) {
      const bool truth = anc(u, v);
      if (decode_classic(classic[u], classic[v]) != truth) return false;
      if (decode_new(approx[u], approx[v]) != truth) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("C1 new-scheme label sizes") {
  bool pass = true;
  for (const std::uint64_t n : size_sweep()) {
    const unsigned z = ceil_lg(n);
    const unsigned want = z + ceil_2lg(z) + 3;
    const unsigned stated_bound = z + 2 * ceil_lglg(n) + 3;
    pass = pass && new_label_bits(n) == want && want <= stated_bound;
    const RootedTree t = generate({TreeKind::Attach, n, 1});
    for (const Label& l : encode_new(t)) pass = pass && l.size() == want;
  }
  pass = pass && new_label_bits(1000) == 20;
  print_line(1, "new labels are exactly z + ceil(2 lg z) + 3 bits across the sweep", pass);
  REQUIRE(pass);
}

TEST_CASE("C2 classic label sizes") {
  bool pass = true;
  for (const std::uint64_t n : size_sweep()) {
    const unsigned want = 2 * clamped_ceil_lg(n);
    pass = pass && classic_label_bits(n) == want;
    const RootedTree t = generate({TreeKind::Attach, n, 1});
    for (const Label& l : encode_classic(t)) pass = pass && l.size() == want;
  }
  print_line(2, "classic labels are exactly 2 max(ceil(lg n), 1) bits across the sweep", pass);
  REQUIRE(pass);
}

TEST_CASE("C3 exhaustive decoder agreement for n <= 8") {
  bool pass = true;
  std::uint64_t trees = 0;
  for (std::size_t n = 1; n <= 8 && pass; ++n) {
    TreeEnumerator e(n);
    while (auto t = e.next()) {
      ++trees;
      if (!decode_matches_oracle_all_pairs(*t, encode_classic(*t), encode_new(*t))) {
        pass = false;
        break;
      }
    }
  }
  pass = pass && trees == 5914;
  print_line(3, "both decoders match the oracle on all 5914 trees with n <= 8", pass);
  REQUIRE(pass);
}

TEST_CASE("C4 randomized decoder agreement at scale") {
  bool pass = true;
  // n = 10^3: every ordered pair of every tree.
  for (const GenSpec& spec : random_specs(1000)) {
    const RootedTree t = generate(spec);
    if (!decode_matches_oracle_all_pairs(t, encode_classic(t), encode_new(t))) {
      pass = false;
      break;
    }
  }
  // n = 10^4: one million sampled ordered pairs per tree.
  if (pass) {
    for (const GenSpec& spec : random_specs(10000)) {
      const RootedTree t = generate(spec);
      const std::vector<Label> classic = encode_classic(t);
      const std::vector<Label> approx = encode_new(t);
      const AncestorMatrix anc(t);
      SplitMix64 rng(spec.seed * 7919 + 1);
      for (std::uint64_t i = 0; i < 1000000 && pass; ++i) {
        const NodeId u = static_cast<NodeId>(rng.below(t.size()));
        const NodeId v = static_cast<NodeId>(rng.below(t.size()));
        const bool truth = anc(u, v);
        pass = pass && decode_classic(classic[u], classic[v]) == truth &&
               decode_new(approx[u], approx[v]) == truth;
      }
      if (!pass) break;
    }
  }
  print_line(4, "decoders match the oracle on 20 random trees at n = 10^3 and 10^4", pass);
  REQUIRE(pass);
}

TEST_CASE("C5 rounding sweep for z = 1..20") {
  bool pass = true;
  for (unsigned z = 1; z <= 20 && pass; ++z) {
    const std::uint64_t top = std::uint64_t{1} << (z + 1);
    for (std::uint64_t m = 1; m <= top; ++m) {
      const RoundedLength r = round_up_to_S(m, z);
      if (!(m <= r.s) || r.k >= 4u * z * z || !(big_pow(r.s, z) < 2 * big_pow(m, z))) {
        pass = false;
        break;
      }
    }
  }
  print_line(5, "m <= s < m (1 + eps) holds exactly for all z <= 20, m <= 2^(z+1)", pass);
  REQUIRE(pass);
}

TEST_CASE("C6 growth invariants on every tested tree") {
  bool pass = true;
  for (std::size_t n = 1; n <= 8 && pass; ++n) {
    TreeEnumerator e(n);
    while (auto t = e.next()) {
      const KAnnotatedAssignment ka = assign_new(*t);
      if (!check_new_invariants(*t, ka).ok) {
        pass = false;
        break;
      }
      for (const std::uint64_t a : ka.ia.a) pass = pass && a <= 2 * t->size() - 1;
    }
  }
  for (const std::uint64_t n : {std::uint64_t{1000}, std::uint64_t{10000}}) {
    for (const GenSpec& spec : random_specs(n)) {
      if (!pass) break;
      const RootedTree t = generate(spec);
      const KAnnotatedAssignment ka = assign_new(t);
      pass = pass && check_new_invariants(t, ka).ok;
      for (const std::uint64_t a : ka.ia.a) pass = pass && a <= 2 * n - 1;
    }
  }
  print_line(6, "approx growth invariants and a(u) <= 2n - 1 hold at every node", pass);
  REQUIRE(pass);
}

TEST_CASE("C7 classic size identity on every tested tree") {
  bool pass = true;
  for (std::size_t n = 1; n <= 8 && pass; ++n) {
    TreeEnumerator e(n);
    while (auto t = e.next()) {
      if (!check_classic_invariant(*t, assign_classic(*t)).ok) {
        pass = false;
        break;
      }
    }
  }
  for (const std::uint64_t n : {std::uint64_t{1000}, std::uint64_t{10000}}) {
    for (const GenSpec& spec : random_specs(n)) {
      if (!pass) break;
      const RootedTree t = generate(spec);
      pass = pass && check_classic_invariant(t, assign_classic(t)).ok;
    }
  }
  print_line(7, "b_bar(u) - a(u) + 1 = |T_u| at every node under the classic scheme", pass);
  REQUIRE(pass);
}

TEST_CASE("C8 framework soundness across strategies") {
  bool pass = true;
  const std::vector<ChildOrder> orders{child_order::ascending_id, child_order::descending_id,
                                       child_order::by_subtree_size};
  for (std::size_t n = 1; n <= 8 && pass; ++n) {
    const unsigned z = clamped_ceil_lg(n);
    std::vector<BChoice> choices{b_choice::tight, make_approx_b_choice(z)};
    TreeEnumerator e(n);
    while (auto t = e.next()) {
      for (const ChildOrder& order : orders) {
        for (const BChoice& choice : choices) {
          const AssignResult r = assign(*t, order, choice);
          if (!check_left_including(*t, r.ia).ok ||
              !check_necessary_conditions(*t, r.ia).all_pass() ||
              !check_sufficient_conditions(*t, r.ia).all_pass() ||
              !check_basic_property(*t, r.ia, r.order).ok || !check_extrema(*t, r.ia).ok) {
            pass = false;
          }
        }
      }
      if (!pass) break;
    }
  }
  print_line(8, "all orderings and b-strategies yield validated left-including output", pass);
  REQUIRE(pass);
}

TEST_CASE("C9 encode_new at n = 10^6 under five seconds") {
  const RootedTree t = generate({TreeKind::Attach, 1000000, 2024});
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Label> labels = encode_new(t);
  const auto stop = std::chrono::steady_clock::now();
  const double seconds = std::chrono::duration<double>(stop - start).count();
  const bool pass = seconds < 5.0 && labels.size() == t.size();
  std::cout << "       (encode_new on 10^6 nodes took " << seconds << " s)\n";
  print_line(9, "exact-arithmetic encoding of a 10^6-node tree stays under 5 s", pass);
  REQUIRE(pass);
}

TEST_CASE("C10 golden labels for the path of three") {
  const RootedTree t(std::vector<NodeId>{0, 1});
  const std::vector<Label> approx = encode_new(t);
  const std::vector<Label> classic = encode_classic(t);
  const bool pass = approx[0].bits() == "0000100" && approx[1].bits() == "0010010" &&
                    approx[2].bits() == "0100000" && classic[0].bits() == "0010" &&
                    classic[1].bits() == "0110" && classic[2].bits() == "1010";
  print_line(10, "path-of-3 labels match the hand-derived bit strings", pass);
  REQUIRE(pass);
}
