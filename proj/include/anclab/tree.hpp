#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anclab/errors.hpp"
#include "anclab/intmath.hpp"

namespace anclab {

using NodeId = std::size_t;

/// Immutable rooted tree in canonical form: node 0 is the root and
/// parent(i) < i for every other node, so parents always precede children.
/// Child lists are stored in ascending id order.
class RootedTree {
 public:
  /// Builds from a canonical parent vector: parents[i] is the parent of
  /// node i+1 and must satisfy parents[i] <= i. n = parents.size() + 1.
  explicit RootedTree(std::vector<NodeId> parents) : parent1_(std::move(parents)) {
    n_ = parent1_.size() + 1;
    for (std::size_t i = 0; i < parent1_.size(); ++i) {
      if (parent1_[i] > i)
        throw MalformedTree("parent of node " + std::to_string(i + 1) +
                            " must be smaller than the node id");
    }
    build_derived();
  }

  std::size_t size() const { return n_; }
  static constexpr NodeId root() { return 0; }

  NodeId parent(NodeId u) const {
    check_node(u);
    if (u == 0) throw std::out_of_range("root has no parent");
    return parent1_[u - 1];
  }

  std::span<const NodeId> children(NodeId u) const {
    check_node(u);
    return {child_flat_.data() + child_off_[u], child_off_[u + 1] - child_off_[u]};
  }

  std::size_t subtree_size(NodeId u) const {
    check_node(u);
    return subtree_size_[u];
  }

  bool is_leaf(NodeId u) const { return children(u).empty(); }

  /// Parents of nodes 1..n-1 (empty for a single-node tree).
  std::span<const NodeId> parent_array() const { return parent1_; }

  friend bool operator==(const RootedTree& x, const RootedTree& y) {
    return x.parent1_ == y.parent1_;
  }

  void check_node(NodeId u) const {
    if (u >= n_) throw std::out_of_range("node id out of range");
  }

 private:
  void build_derived() {
    subtree_size_.assign(n_, 1);
    for (std::size_t i = n_ - 1; i >= 1; --i)
      subtree_size_[parent1_[i - 1]] += subtree_size_[i];

    child_off_.assign(n_ + 1, 0);
    for (NodeId p : parent1_) ++child_off_[p + 1];
    for (std::size_t i = 1; i <= n_; ++i) child_off_[i] += child_off_[i - 1];
    child_flat_.resize(n_ - 1);
    std::vector<std::size_t> cursor(child_off_.begin(), child_off_.end() - 1);
    for (std::size_t i = 1; i < n_; ++i) child_flat_[cursor[parent1_[i - 1]]++] = i;
  }

  std::size_t n_ = 1;
  std::vector<NodeId> parent1_;       // parent of node i+1
  std::vector<std::size_t> child_off_;
  std::vector<NodeId> child_flat_;    // children, grouped per node, ascending
  std::vector<std::size_t> subtree_size_;
};

/// Validating entry point for external parent arrays (possibly negative).
inline RootedTree from_parent_array(std::span<const std::int64_t> parents) {
  std::vector<NodeId> p;
  p.reserve(parents.size());
  for (std::size_t i = 0; i < parents.size(); ++i) {
    const std::int64_t v = parents[i];
    if (v < 0 || static_cast<std::uint64_t>(v) > i)
      throw MalformedTree("parent entry " + std::to_string(i + 1) +
                          " out of range [0, " + std::to_string(i) + "]");
    p.push_back(static_cast<NodeId>(v));
  }
  return RootedTree(std::move(p));
}

inline RootedTree from_parent_array(const std::vector<std::int64_t>& parents) {
  return from_parent_array(std::span<const std::int64_t>(parents));
}

/// Canonicalization result: the relabeled tree and the old-id -> new-id map.
struct CanonicalTree {
  RootedTree tree;
  std::vector<NodeId> old_to_new;
};

/// Builds a canonical tree from an undirected edge list rooted at `root`.
/// Nodes are relabeled by BFS from the root, visiting neighbors in
/// ascending old id, which guarantees parent(i) < i.
inline CanonicalTree from_edge_list(std::size_t n, NodeId root,
                                    std::span<const std::pair<NodeId, NodeId>> edges) {
  if (n == 0) throw EmptyInput("edge list tree must have at least one node");
  if (root >= n) throw MalformedTree("root id out of range");
  if (edges.size() != n - 1)
    throw MalformedTree("expected exactly n-1 edges, got " + std::to_string(edges.size()));

  std::vector<std::vector<NodeId>> adj(n);
  std::set<std::pair<NodeId, NodeId>> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw MalformedTree("edge endpoint out of range");
    if (u == v) throw MalformedTree("self-loop");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second) throw MalformedTree("duplicate edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  constexpr NodeId kUnset = static_cast<NodeId>(-1);
  std::vector<NodeId> old_to_new(n, kUnset);
  std::vector<NodeId> parents;
  parents.reserve(n - 1);
  std::queue<NodeId> queue;
  old_to_new[root] = 0;
  queue.push(root);
  NodeId next_id = 1;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop();
    for (NodeId w : adj[u]) {
      if (old_to_new[w] != kUnset) continue;
      old_to_new[w] = next_id++;
      parents.push_back(old_to_new[u]);
      queue.push(w);
    }
  }
  if (next_id != n) throw MalformedTree("edges do not connect all nodes");
  return {RootedTree(std::move(parents)), std::move(old_to_new)};
}

/// Ground-truth ancestry test: walks parent pointers up from v.
/// Reflexive: every node is an ancestor of itself.
inline bool is_ancestor_oracle(const RootedTree& tree, NodeId u, NodeId v) {
  tree.check_node(u);
  tree.check_node(v);
  while (v > u) v = tree.parent(v);  // ancestors always have smaller ids
  return v == u;
}

/// Children of u sorted by subtree size, ascending; ties by ascending id.
inline std::vector<NodeId> children_by_subtree_size(const RootedTree& tree, NodeId u) {
  auto span = tree.children(u);
  std::vector<NodeId> out(span.begin(), span.end());
  std::stable_sort(out.begin(), out.end(), [&](NodeId x, NodeId y) {
    return tree.subtree_size(x) < tree.subtree_size(y);
  });
  return out;
}

/// Batched form of the parent-walk oracle: a packed n x n ancestor matrix,
/// built as the transitive closure of the parent relation. Memory is n^2
/// bits, so construction is limited to n <= 32768.
class AncestorMatrix {
 public:
  explicit AncestorMatrix(const RootedTree& tree)
      : n_(tree.size()), words_((tree.size() + 63) / 64) {
    if (n_ > 32768) throw BadSpec("AncestorMatrix limited to n <= 32768");
    rows_.assign(n_ * words_, 0);
    set(0, 0);
    for (NodeId v = 1; v < n_; ++v) {
      const NodeId p = tree.parent(v);
      std::copy_n(rows_.begin() + p * words_, words_, rows_.begin() + v * words_);
      set(v, v);
    }
  }

  std::size_t size() const { return n_; }

  /// True iff `ancestor` lies on the root path of `descendant`.
  bool operator()(NodeId ancestor, NodeId descendant) const {
    return (rows_[descendant * words_ + ancestor / 64] >> (ancestor % 64)) & 1;
  }

 private:
  void set(NodeId v, NodeId a) { rows_[v * words_ + a / 64] |= std::uint64_t{1} << (a % 64); }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace anclab
