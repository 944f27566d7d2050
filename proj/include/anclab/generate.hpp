#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "anclab/errors.hpp"
#include "anclab/intmath.hpp"
#include "anclab/tree.hpp"

namespace anclab {

/// SplitMix64 (Vigna's reference mixer). Chosen because it is tiny, fully
/// specified by three constants, and has published test vectors, so seeded
/// trees are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t x = (state_ += 0x9E3779B97F4A7C15ull);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  /// Uniform-ish value in [0, n); plain modulo, which is part of the
  /// documented generation recipe (bias is irrelevant for test data).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw BadSpec("below(0)");
    return next() % n;
  }

 private:
  std::uint64_t state_;
};

enum class TreeKind { Path, Star, Kary, Caterpillar, Attach, Prufer };

struct GenSpec {
  TreeKind kind = TreeKind::Path;
  std::uint64_t n = 1;
  std::uint64_t seed = 0;
  unsigned arity = 2;  // kary only
};

inline std::string kind_name(TreeKind kind, unsigned arity = 2) {
  switch (kind) {
    case TreeKind::Path: return "path";
    case TreeKind::Star: return "star";
    case TreeKind::Kary: return "kary:" + std::to_string(arity);
    case TreeKind::Caterpillar: return "caterpillar";
    case TreeKind::Attach: return "attach";
    case TreeKind::Prufer: return "prufer";
  }
  throw BadSpec("unknown tree kind");
}

/// Parses "path", "star", "caterpillar", "attach", "prufer", or "kary:A".
inline std::pair<TreeKind, unsigned> parse_kind(const std::string& name) {
  if (name == "path") return {TreeKind::Path, 2};
  if (name == "star") return {TreeKind::Star, 2};
  if (name == "caterpillar") return {TreeKind::Caterpillar, 2};
  if (name == "attach") return {TreeKind::Attach, 2};
  if (name == "prufer") return {TreeKind::Prufer, 2};
  if (name.rfind("kary:", 0) == 0) {
    const std::string digits = name.substr(5);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw BadSpec("bad arity in kind '" + name + "'");
    const unsigned long arity = std::stoul(digits);
    if (arity == 0 || arity > 1u << 20) throw BadSpec("arity out of range in '" + name + "'");
    return {TreeKind::Kary, static_cast<unsigned>(arity)};
  }
  throw BadSpec("unknown tree kind '" + name +
                "' (expected path|star|kary:A|caterpillar|attach|prufer)");
}

/// A generated tree plus the old-id -> new-id map for kinds that pass
/// through canonicalization (prufer); the identity map otherwise.
struct GeneratedTree {
  RootedTree tree;
  std::vector<NodeId> old_to_new;
};

namespace detail {

inline std::vector<NodeId> identity_map(std::size_t n) {
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  return ids;
}

/// Uniform labeled tree on n >= 3 nodes from a random Prufer sequence,
/// decoded with the smallest-leaf rule, rooted at node 0.
inline CanonicalTree prufer_tree(std::uint64_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<NodeId> seq(n - 2);
  for (auto& x : seq) x = static_cast<NodeId>(rng.below(n));

  std::vector<std::size_t> degree(n, 1);
  for (NodeId x : seq) ++degree[x];
  std::set<NodeId> leaves;
  for (NodeId v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n - 1);
  for (NodeId x : seq) {
    const NodeId leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  const NodeId u = *leaves.begin();
  const NodeId v = *std::next(leaves.begin());
  edges.emplace_back(u, v);
  return from_edge_list(n, 0, edges);
}

}  // namespace detail

inline GeneratedTree generate_with_map(const GenSpec& spec) {
  const std::uint64_t n = spec.n;
  if (n == 0) throw BadSpec("tree must have at least one node");
  if (n > kMaxNodeCount) throw RangeExceeded("node count exceeds 2^62");

  std::vector<NodeId> parents;
  if (n > 1) parents.reserve(n - 1);
  switch (spec.kind) {
    case TreeKind::Path:
      for (std::uint64_t i = 1; i < n; ++i) parents.push_back(i - 1);
      break;
    case TreeKind::Star:
      parents.assign(n > 1 ? n - 1 : 0, 0);
      break;
    case TreeKind::Kary: {
      if (spec.arity == 0) throw BadSpec("kary arity must be positive");
      for (std::uint64_t i = 1; i < n; ++i) parents.push_back((i - 1) / spec.arity);
      break;
    }
    case TreeKind::Caterpillar: {
      // Spine path of m = ceil(n/2) nodes; leg j hangs off spine node j.
      const std::uint64_t m = (n + 1) / 2;
      for (std::uint64_t i = 1; i < m; ++i) parents.push_back(i - 1);
      for (std::uint64_t j = 0; m + j < n; ++j) parents.push_back(j);
      break;
    }
    case TreeKind::Attach: {
      SplitMix64 rng(spec.seed);
      for (std::uint64_t i = 1; i < n; ++i) parents.push_back(rng.below(i));
      break;
    }
    case TreeKind::Prufer: {
      if (n == 1) return {RootedTree({}), detail::identity_map(1)};
      if (n == 2) return {RootedTree({0}), detail::identity_map(2)};
      CanonicalTree c = detail::prufer_tree(n, spec.seed);
      return {std::move(c.tree), std::move(c.old_to_new)};
    }
  }
  return {RootedTree(std::move(parents)), detail::identity_map(n)};
}

inline RootedTree generate(const GenSpec& spec) { return generate_with_map(spec).tree; }

/// Number of canonical parent arrays on n nodes: (n-1)!.
inline std::uint64_t enumeration_count(std::size_t n) {
  if (n == 0 || n > 9) throw BadSpec("enumeration is limited to 1 <= n <= 9");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i < n; ++i) f *= i;
  return f;
}

/// Streams every canonical tree on n nodes, i.e. every parent array with
/// p_i in [0, i), in lexicographic order. Guarded to n <= 9 (8! = 40320).
class TreeEnumerator {
 public:
  explicit TreeEnumerator(std::size_t n) : n_(n) {
    if (n_ == 0 || n_ > 9) throw BadSpec("enumeration is limited to 1 <= n <= 9");
    parents_.assign(n_ > 1 ? n_ - 1 : 0, 0);
  }

  std::optional<RootedTree> next() {
    if (done_) return std::nullopt;
    RootedTree out(parents_);
    // Mixed-radix increment: digit i (for node i+1) ranges over [0, i].
    done_ = true;
    for (std::size_t i = parents_.size(); i-- > 0;) {
      if (parents_[i] < i) {
        ++parents_[i];
        std::fill(parents_.begin() + i + 1, parents_.end(), NodeId{0});
        done_ = false;
        break;
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<NodeId> parents_;
  bool done_ = false;
};

}  // namespace anclab
