#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "anclab/errors.hpp"
#include "anclab/label.hpp"
#include "anclab/tree_io.hpp"

namespace anclab {

enum class Scheme { Classic, New };

inline std::string scheme_name(Scheme s) { return s == Scheme::Classic ? "classic" : "new"; }

inline Scheme scheme_from_name(const std::string& name) {
  if (name == "classic") return Scheme::Classic;
  if (name == "new") return Scheme::New;
  throw BadSpec("unknown scheme '" + name + "' (expected 'classic' or 'new')");
}

/// A full labeling of a tree: labels[i] belongs to node i.
struct LabelFile {
  Scheme scheme = Scheme::Classic;
  std::vector<Label> labels;
};

/// Label file format:
///   - '#' comments and blank lines ignored
///   - header line: `<n> <scheme>` with scheme in {classic, new}
///   - n rows `<id> <bits>`, ids 0..n-1 in order, bits a non-empty 0/1 string
inline LabelFile read_labels(std::istream& in) {
  std::string line;
  if (!detail::next_significant_line(in, line)) throw EmptyInput("no header in label input");

  std::uint64_t n = 0;
  std::string scheme_str;
  {
    std::istringstream ls(line);
    if (!(ls >> n >> scheme_str)) throw LabelFormat("bad label header: " + line);
    std::string rest;
    if (ls >> rest) throw LabelFormat("trailing tokens after label header");
  }
  if (n == 0) throw EmptyInput("label file must describe at least one node");

  LabelFile file;
  file.scheme = scheme_from_name(scheme_str);
  file.labels.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!detail::next_significant_line(in, line))
      throw LabelFormat("expected " + std::to_string(n) + " label rows, got " +
                        std::to_string(i));
    std::istringstream ls(line);
    std::uint64_t id = 0;
    std::string bits;
    if (!(ls >> id >> bits)) throw LabelFormat("bad label row: " + line);
    std::string rest;
    if (ls >> rest) throw LabelFormat("trailing tokens in label row: " + line);
    if (id != i)
      throw LabelFormat("label rows must be in id order: expected " + std::to_string(i) +
                        ", got " + std::to_string(id));
    file.labels.push_back(Label::from_string(bits));
  }
  return file;
}

inline void write_labels(std::ostream& out, const LabelFile& file) {
  out << file.labels.size() << ' ' << scheme_name(file.scheme) << "\n";
  for (std::size_t i = 0; i < file.labels.size(); ++i)
    out << i << ' ' << file.labels[i].bits() << "\n";
}

inline LabelFile parse_labels(const std::string& text) {
  std::istringstream in(text);
  return read_labels(in);
}

inline std::string format_labels(const LabelFile& file) {
  std::ostringstream out;
  write_labels(out, file);
  return out.str();
}

}  // namespace anclab
