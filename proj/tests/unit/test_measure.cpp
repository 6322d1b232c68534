#include <doctest.h>

#include <nfl/errors.hpp>
#include <nfl/measure.hpp>
#include <nfl/trace.hpp>
#include <nfl/value_table.hpp>

using nfl::Measure;
using nfl::MeasureKind;
using nfl::Orientation;
using nfl::Rat;
using nfl::TraceRecord;
using nfl::TraceStep;

namespace {

TraceRecord make_trace(std::initializer_list<int> values) {
  TraceRecord trace;
  trace.budget = static_cast<int>(values.size());
  int point = 0;
  for (int v : values) trace.steps.push_back(TraceStep{point++, Rat(v)});
  return trace;
}

} // namespace

TEST_CASE("parse_measure reads kind and horizon; describe round-trips") {
  const Measure best = nfl::parse_measure("best:3");
  CHECK(best.kind == MeasureKind::best_so_far);
  CHECK(best.horizon == 3);
  CHECK(best.describe() == "best:3");
  const Measure mean = nfl::parse_measure("mean:2");
  CHECK(mean.kind == MeasureKind::mean_of_trace);
  CHECK(mean.describe() == "mean:2");
  CHECK_THROWS_AS(nfl::parse_measure("best"), nfl::Error);
  CHECK_THROWS_AS(nfl::parse_measure("best:x"), nfl::Error);
  CHECK_THROWS_AS(nfl::parse_measure("best:0"), nfl::Error);
  CHECK_THROWS_AS(nfl::parse_measure("median:2"), nfl::Error);
}

TEST_CASE("best-so-far truncates at the horizon and follows orientation") {
  const TraceRecord trace = make_trace({1, 0, 2});
  const Measure best2(MeasureKind::best_so_far, 2);
  CHECK(nfl::apply_measure(best2, trace, Orientation::maximize) == Rat(1));
  CHECK(nfl::apply_measure(best2, trace, Orientation::minimize) == Rat(0));
  const Measure best3(MeasureKind::best_so_far, 3);
  CHECK(nfl::apply_measure(best3, trace, Orientation::maximize) == Rat(2));
  // A horizon past the trace end just uses the whole trace.
  const Measure best9(MeasureKind::best_so_far, 9);
  CHECK(nfl::apply_measure(best9, trace, Orientation::maximize) == Rat(2));
}

TEST_CASE("mean-of-trace averages the truncated prefix exactly") {
  const TraceRecord trace = make_trace({1, 0, 2});
  CHECK(nfl::apply_measure(Measure(MeasureKind::mean_of_trace, 2), trace,
                           Orientation::maximize) == Rat(1) / 2);
  CHECK(nfl::apply_measure(Measure(MeasureKind::mean_of_trace, 3), trace,
                           Orientation::maximize) == Rat(1));
  // Orientation is irrelevant to the mean.
  CHECK(nfl::apply_measure(Measure(MeasureKind::mean_of_trace, 3), trace,
                           Orientation::minimize) == Rat(1));
}

TEST_CASE("an empty trace cannot be measured") {
  TraceRecord empty;
  empty.budget = 1;
  CHECK_THROWS_AS(nfl::apply_measure(Measure(MeasureKind::best_so_far, 1), empty,
                                     Orientation::maximize),
                  nfl::Error);
}
