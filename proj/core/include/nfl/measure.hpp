#pragma once

#include "nfl/rational.hpp"
#include "nfl/trace.hpp"
#include "nfl/value_table.hpp"

#include <string>

namespace nfl {

enum class MeasureKind { best_so_far, mean_of_trace };

// A scalar functional of a trace's value sequence. The framework accepts any
// such functional in principle; these two named ones cover the classical
// statements. Horizon m truncates the trace before evaluation.
struct Measure {
  MeasureKind kind = MeasureKind::best_so_far;
  int horizon = 1;

  Measure() = default;
  Measure(MeasureKind k, int m);

  std::string describe() const; // "best:3" / "mean:2"
};

Measure parse_measure(const std::string& text); // "best:3" / "mean:2"

Rat apply_measure(const Measure& measure, const TraceRecord& trace,
                  Orientation orientation);

} // namespace nfl
