#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anclab/errors.hpp"
#include "anclab/intmath.hpp"
#include "anclab/interval.hpp"
#include "anclab/label.hpp"
#include "anclab/tree.hpp"

namespace anclab {

/// Field width of one classic label half: max(ceil(lg n), 1).
/// The clamp keeps n = 1 and n = 2 at one bit per field.
inline unsigned classic_field_width(std::uint64_t n) { return clamped_ceil_lg(n); }

/// Total classic label size: 2 * max(ceil(lg n), 1) bits.
inline unsigned classic_label_bits(std::uint64_t n) { return 2 * classic_field_width(n); }

/// Classic assignment: children in ascending id order, b(u) = a_bar(u).
/// The a values come out as a preorder numbering 0..n-1 and
/// b_bar(u) - a(u) + 1 = |T_u| at every node.
inline AssignResult assign_classic_full(const RootedTree& tree) {
  return assign(tree, child_order::ascending_id, b_choice::tight, 0);
}

inline IntervalAssignment assign_classic(const RootedTree& tree) {
  return assign_classic_full(tree).ia;
}

/// Per-node size identity of the classic assignment:
/// b_bar(u) - a(u) + 1 = |T_u|, and the a values form a permutation
/// of {0, ..., n-1}.
inline CheckResult check_classic_invariant(const RootedTree& tree, const IntervalAssignment& ia) {
  for (NodeId u = 0; u < tree.size(); ++u) {
    const std::uint64_t span = ia.b_bar[u] - ia.a[u] + 1;
    if (span != tree.subtree_size(u))
      return check_fail("node " + std::to_string(u) + ": b_bar - a + 1 = " +
                        std::to_string(span) + " but |T_u| = " +
                        std::to_string(tree.subtree_size(u)));
  }
  std::vector<std::uint64_t> sorted(ia.a);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i)
      return check_fail("a values are not a permutation of 0.." +
                        std::to_string(tree.size() - 1));
  return check_pass();
}

/// Classic labels: l(u) = pack(a(u), w) . pack(b(u), w), w = classic_field_width(n).
inline std::vector<Label> encode_classic(const RootedTree& tree) {
  const unsigned w = classic_field_width(tree.size());
  const IntervalAssignment ia = assign_classic(tree);
  std::vector<Label> labels;
  labels.reserve(tree.size());
  for (NodeId u = 0; u < tree.size(); ++u)
    labels.push_back(concat(pack(ia.a[u], w), pack(ia.b[u], w)));
  return labels;
}

/// Classic query: split both labels at the midpoint into (a, b) fields and
/// test a_v in [a_u, b_u]. Equal-width MSB-first fields compare correctly
/// as plain strings, which keeps the decoder exact at any width.
inline bool decode_classic(const Label& lu, const Label& lv) {
  if (lu.size() != lv.size())
    throw LabelFormat("classic labels differ in length: " + std::to_string(lu.size()) +
                      " vs " + std::to_string(lv.size()));
  if (lu.size() % 2 != 0)
    throw LabelFormat("classic label length must be even, got " + std::to_string(lu.size()));
  auto [a_u, b_u] = split(lu, lu.size() / 2);
  auto [a_v, b_v_unused] = split(lv, lv.size() / 2);
  (void)b_v_unused;
  return a_u.bits() <= a_v.bits() && a_v.bits() <= b_u.bits();
}

}  // namespace anclab
