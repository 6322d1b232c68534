#pragma once

#include <nfl/counterexamples.hpp>
#include <nfl/function_set.hpp>
#include <nfl/search_space.hpp>
#include <nfl/value_table.hpp>
#include <nfl/verifier.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace nflab {

using Json = nlohmann::ordered_json;

// A parsed problem file: the space plus one objective table on it.
struct LoadedProblem {
  nfl::SearchSpace space;
  nfl::ValueTable table;
};

// Reads and validates a JSON problem definition. All diagnostics carry the
// file path and the offending field. Values must be JSON integers or "p/q"
// strings; non-integer JSON numbers are rejected to keep everything exact.
LoadedProblem load_problem(const std::string& path);

// Parses an in-memory definition (the file loader plus every test goes
// through here).
LoadedProblem parse_problem(const Json& doc, const std::string& context);

// {"space":..., "orientation":..., "functions": [[...], ...]}
struct LoadedFunctionSet {
  nfl::SearchSpace space;
  nfl::FunctionSet functions;
};
LoadedFunctionSet load_function_set(const std::string& path);

// {"space":..., "orientation":..., "support": [{"values":[...],"weight":"1/6"},...]}
nfl::ProblemDistribution load_distribution(const std::string& path);

// {"cities": n, "matrix": [[...], ...]}
nfl::TspInstance load_tsp(const std::string& path);

// {"vars": n, "clauses": [[1,-2], ...]} — 1-based signed literals.
nfl::Max2SatInstance load_max2sat(const std::string& path);

// Shared scalar parsers.
nfl::Rat parse_value(const Json& v, const std::string& context);
std::vector<nfl::Rat> parse_values(const Json& arr, const std::string& context);
Json read_json_file(const std::string& path);

} // namespace nflab
