#pragma once

#include "nfl/errors.hpp"
#include "nfl/rational.hpp"

#include <vector>

namespace nfl {

struct TraceStep {
  int point;
  Rat value;
};

// The visited-point / observed-value history of one run. Non-repeating by
// construction: black-box algorithms here never re-evaluate a point.
struct TraceRecord {
  std::vector<TraceStep> steps;
  int budget = 0;

  int length() const { return static_cast<int>(steps.size()); }

  std::vector<Rat> value_sequence() const {
    std::vector<Rat> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.value);
    return out;
  }

  // Checks the distinct-points and length <= budget invariants.
  void validate() const {
    if (length() > budget)
      throw Error(ErrorKind::invariant, "trace longer than its budget");
    for (int i = 0; i < length(); ++i)
      for (int j = i + 1; j < length(); ++j)
        if (steps[i].point == steps[j].point)
          throw Error(ErrorKind::invariant, "trace repeats a point");
  }
};

} // namespace nfl
