#pragma once

#include "nfl/errors.hpp"
#include "nfl/value_table.hpp"

#include <vector>

namespace nfl {

// A deduplicated set of objective functions on one space, kept in lexicographic
// order by value sequence so every sweep and report is reproducible.
struct FunctionSet {
  std::vector<ValueTable> members;

  FunctionSet() = default;
  explicit FunctionSet(std::vector<ValueTable> tables); // sorts, dedups, validates

  int size() const { return static_cast<int>(members.size()); }
  int space_size() const;
  Orientation orientation() const;

  bool contains(const ValueTable& f) const; // binary search on the canonical order
};

} // namespace nfl
