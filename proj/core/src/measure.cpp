#include "nfl/measure.hpp"

#include "nfl/errors.hpp"

#include <algorithm>

namespace nfl {

Measure::Measure(MeasureKind k, int m) : kind(k), horizon(m) {
  if (m < 1) throw Error(ErrorKind::invariant, "measure horizon must be >= 1");
}

std::string Measure::describe() const {
  const char* name = kind == MeasureKind::best_so_far ? "best" : "mean";
  return std::string(name) + ":" + std::to_string(horizon);
}

Measure parse_measure(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::schema, "measure must look like best:3 or mean:2");
  const std::string name = text.substr(0, colon);
  int horizon = 0;
  try {
    horizon = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::schema, "bad measure horizon in '" + text + "'");
  }
  if (horizon < 1)
    throw Error(ErrorKind::schema, "measure horizon must be >= 1 in '" + text + "'");
  if (name == "best") return Measure(MeasureKind::best_so_far, horizon);
  if (name == "mean") return Measure(MeasureKind::mean_of_trace, horizon);
  throw Error(ErrorKind::schema, "unknown measure kind '" + name + "'");
}

Rat apply_measure(const Measure& measure, const TraceRecord& trace,
                  Orientation orientation) {
  if (trace.steps.empty())
    throw Error(ErrorKind::empty_trace, "measure applied to an empty trace");
  const int use = std::min(measure.horizon, trace.length());
  if (measure.kind == MeasureKind::best_so_far) {
    Rat best = trace.steps[0].value;
    for (int i = 1; i < use; ++i)
      if (value_improves(trace.steps[i].value, best, orientation))
        best = trace.steps[i].value;
    return best;
  }
  Rat sum = 0;
  for (int i = 0; i < use; ++i) sum += trace.steps[i].value;
  return sum / use;
}

} // namespace nfl
