#pragma once

#include <stdexcept>

namespace anclab {

/// Base class for all anclab errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input does not describe a rooted tree (bad parent array, cycle, ...).
struct MalformedTree : Error {
  using Error::Error;
};

/// A file declared zero nodes.
struct EmptyInput : Error {
  using Error::Error;
};

/// A b-choice strategy returned b(u) below the subtree a-maximum.
struct StrategyViolation : Error {
  using Error::Error;
};

/// A scheme quantity left its admissible range (k >= 4z^2, n > 2^62, ...).
struct RangeExceeded : Error {
  using Error::Error;
};

/// A label or label file is structurally invalid.
struct LabelFormat : Error {
  using Error::Error;
};

/// A value does not fit the requested bit width.
struct Overflow : Error {
  using Error::Error;
};

/// Split position outside (0, label length).
struct BadSplit : Error {
  using Error::Error;
};

/// Invalid generator/benchmark/strategy parameters.
struct BadSpec : Error {
  using Error::Error;
};

}  // namespace anclab
