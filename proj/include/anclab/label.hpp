#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "anclab/errors.hpp"

namespace anclab {

using uint128 = unsigned __int128;

/// A fixed-width bit string, most significant bit first. Never empty.
class Label {
 public:
  explicit Label(std::string bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw LabelFormat("label must be non-empty");
    for (char c : bits_) {
      if (c != '0' && c != '1') throw LabelFormat("label may contain only '0'/'1'");
    }
  }

  static Label from_string(std::string_view bits) { return Label(std::string(bits)); }

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }

  friend bool operator==(const Label&, const Label&) = default;

 private:
  std::string bits_;
};

/// value as exactly `width` bits, MSB first, zero-padded. width in [1, 128].
inline Label pack128(uint128 value, unsigned width) {
  if (width == 0 || width > 128) throw BadSpec("pack width must be in [1, 128]");
  if (width < 128 && (value >> width) != 0) throw Overflow("value does not fit width");
  std::string bits(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1) bits[i] = '1';
  }
  return Label(std::move(bits));
}

inline Label pack(std::uint64_t value, unsigned width) {
  if (width == 0 || width > 64) throw BadSpec("pack width must be in [1, 64]");
  return pack128(value, width);
}

/// MSB-first unsigned value of a label of at most 128 bits.
inline uint128 unpack128(const Label& l) {
  if (l.size() > 128) throw LabelFormat("label too long to unpack");
  uint128 v = 0;
  for (char c : l.bits()) v = (v << 1) | static_cast<unsigned>(c == '1');
  return v;
}

inline std::uint64_t unpack(const Label& l) {
  if (l.size() > 64) throw LabelFormat("label too long to unpack");
  return static_cast<std::uint64_t>(unpack128(l));
}

inline Label concat(const Label& a, const Label& b) {
  return Label(a.bits() + b.bits());
}

/// Splits l into its first prefix_width bits and the rest.
inline std::pair<Label, Label> split(const Label& l, std::size_t prefix_width) {
  if (prefix_width == 0 || prefix_width >= l.size())
    throw BadSplit("split position must be inside the label");
  return {Label(l.bits().substr(0, prefix_width)), Label(l.bits().substr(prefix_width))};
}

}  // namespace anclab
