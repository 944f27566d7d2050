#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "anclab/errors.hpp"
#include "anclab/intmath.hpp"
#include "anclab/tree.hpp"

namespace anclab {

namespace detail {

/// Returns the next line that is neither blank nor a '#' comment,
/// or false at end of input.
inline bool next_significant_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace detail

/// Reads a tree in the canonical text format:
///   - '#' starts a comment line; blank lines are ignored
///   - first significant line: node count n
///   - second significant line: the n-1 parents of nodes 1..n-1,
///     whitespace-separated (absent when n == 1)
inline RootedTree read_tree(std::istream& in) {
  std::string line;
  if (!detail::next_significant_line(in, line)) throw EmptyInput("no node count in tree input");

  std::uint64_t n = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> n)) throw MalformedTree("node count is not a number: " + line);
    std::string rest;
    if (ls >> rest) throw MalformedTree("trailing tokens after node count");
  }
  if (n == 0) throw EmptyInput("tree must have at least one node");
  if (n > kMaxNodeCount) throw RangeExceeded("node count exceeds 2^62");

  if (n == 1) return RootedTree({});

  if (!detail::next_significant_line(in, line))
    throw MalformedTree("missing parent line for n = " + std::to_string(n));
  std::istringstream ls(line);
  std::vector<std::int64_t> parents;
  parents.reserve(n - 1);
  std::int64_t p = 0;
  while (ls >> p) parents.push_back(p);
  if (!ls.eof()) throw MalformedTree("parent line contains a non-numeric token");
  if (parents.size() != n - 1)
    throw MalformedTree("expected " + std::to_string(n - 1) + " parents, got " +
                        std::to_string(parents.size()));
  return from_parent_array(parents);
}

inline void write_tree(std::ostream& out, const RootedTree& tree) {
  out << tree.size() << "\n";
  if (tree.size() > 1) {
    auto parents = tree.parent_array();
    for (std::size_t i = 0; i < parents.size(); ++i) {
      if (i) out << ' ';
      out << parents[i];
    }
    out << "\n";
  }
}

inline RootedTree parse_tree(const std::string& text) {
  std::istringstream in(text);
  return read_tree(in);
}

inline std::string format_tree(const RootedTree& tree) {
  std::ostringstream out;
  write_tree(out, tree);
  return out.str();
}

}  // namespace anclab
