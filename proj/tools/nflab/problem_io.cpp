#include "problem_io.hpp"

#include <nfl/errors.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace nflab {

using nfl::Error;
using nfl::ErrorKind;

namespace {

[[noreturn]] void schema_error(const std::string& context, const std::string& what) {
  throw Error(ErrorKind::schema, context + ": " + what);
}

long long require_int(const Json& v, const std::string& context) {
  if (!v.is_number_integer()) schema_error(context, "expected an integer");
  return v.get<long long>();
}

nfl::SearchSpace parse_space(const Json& doc, const std::string& context,
                             bool* is_bits = nullptr) {
  if (!doc.contains("space")) {
    // Shorthand: a top-level "bits" stands in for {"space": {"bits": n}}.
    if (doc.contains("bits")) {
      const long long bits = require_int(doc.at("bits"), context + ".bits");
      if (is_bits) *is_bits = true;
      return nfl::SearchSpace::bitstrings(static_cast<int>(bits));
    }
    schema_error(context, "missing \"space\"");
  }
  const Json& space = doc.at("space");
  if (!space.is_object()) schema_error(context + ".space", "expected an object");
  if (space.contains("bits")) {
    const long long bits = require_int(space.at("bits"), context + ".space.bits");
    if (is_bits) *is_bits = true;
    return nfl::SearchSpace::bitstrings(static_cast<int>(bits));
  }
  if (space.contains("size")) {
    const long long size = require_int(space.at("size"), context + ".space.size");
    if (is_bits) *is_bits = false;
    return nfl::SearchSpace::plain(static_cast<int>(size));
  }
  schema_error(context + ".space", "expected \"bits\" or \"size\"");
}

nfl::Orientation parse_orientation_field(const Json& doc, const std::string& context) {
  if (!doc.contains("orientation")) return nfl::Orientation::maximize;
  const Json& o = doc.at("orientation");
  if (!o.is_string()) schema_error(context + ".orientation", "expected a string");
  return nfl::parse_orientation(o.get<std::string>());
}

void apply_neighborhood(nfl::SearchSpace& space, const Json& doc,
                        const std::string& context) {
  if (!doc.contains("neighborhood")) return;
  const Json& nb = doc.at("neighborhood");
  if (nb.is_string()) {
    const std::string name = nb.get<std::string>();
    if (name == "bit-flip") {
      if (!space.has_bits())
        schema_error(context + ".neighborhood",
                     "bit-flip requires a bitstring space");
      return; // bitstring spaces carry bit-flip adjacency already
    }
    if (name == "none") return;
    schema_error(context + ".neighborhood", "unknown selector \"" + name + "\"");
  }
  if (nb.is_object() && nb.contains("edges")) {
    const Json& edges = nb.at("edges");
    if (!edges.is_array()) schema_error(context + ".neighborhood.edges", "expected an array");
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(space.size()));
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 2)
        schema_error(context + ".neighborhood.edges", "each edge is a pair");
      const long long a = require_int(e.at(0), context + ".neighborhood.edges");
      const long long b = require_int(e.at(1), context + ".neighborhood.edges");
      if (a < 0 || a >= space.size() || b < 0 || b >= space.size() || a == b)
        schema_error(context + ".neighborhood.edges", "edge endpoint out of range");
      adjacency[static_cast<std::size_t>(a)].push_back(static_cast<int>(b));
      adjacency[static_cast<std::size_t>(b)].push_back(static_cast<int>(a));
    }
    for (auto& row : adjacency) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    space.set_neighbors(std::move(adjacency));
    return;
  }
  schema_error(context + ".neighborhood", "expected a selector or {\"edges\": ...}");
}

} // namespace

nfl::Rat parse_value(const Json& v, const std::string& context) {
  if (v.is_number_integer()) return nfl::Rat(v.get<long long>());
  if (v.is_string()) {
    try {
      return nfl::parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      schema_error(context, e.what());
    }
  }
  if (v.is_number())
    schema_error(context, "non-integer numbers are inexact; use a \"p/q\" string");
  schema_error(context, "expected an integer or a \"p/q\" string");
}

std::vector<nfl::Rat> parse_values(const Json& arr, const std::string& context) {
  if (!arr.is_array()) schema_error(context, "expected an array");
  std::vector<nfl::Rat> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(parse_value(arr.at(i), context + "[" + std::to_string(i) + "]"));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::schema, path + ": cannot open file");
  try {
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte offset; surface it as the diagnostic.
    throw Error(ErrorKind::schema, path + ": " + e.what());
  }
}

LoadedProblem parse_problem(const Json& doc, const std::string& context) {
  if (!doc.is_object()) schema_error(context, "expected an object");
  nfl::SearchSpace space = parse_space(doc, context);
  const nfl::Orientation orientation = parse_orientation_field(doc, context);

  nfl::ValueTable table;
  if (doc.contains("values") && doc.contains("generator"))
    schema_error(context, "give \"values\" or \"generator\", not both");
  if (doc.contains("values")) {
    table = nfl::ValueTable(parse_values(doc.at("values"), context + ".values"),
                            orientation);
  } else if (doc.contains("generator")) {
    const Json& g = doc.at("generator");
    if (!g.is_string()) schema_error(context + ".generator", "expected a string");
    const std::string name = g.get<std::string>();
    if (!space.has_bits())
      schema_error(context + ".generator",
                   "generator \"" + name + "\" requires a bitstring space");
    if (name == "onemax")
      table = nfl::onemax_table(space.bits());
    else if (name == "zeromax")
      table = nfl::zeromax_table(space.bits());
    else if (name == "parity")
      table = nfl::parity_table(space.bits());
    else
      schema_error(context + ".generator", "unknown generator \"" + name + "\"");
    table.orientation = orientation;
  } else {
    schema_error(context, "missing \"values\" or \"generator\"");
  }

  if (table.size() != space.size())
    schema_error(context + ".values",
                 "length " + std::to_string(table.size()) +
                     " does not match space size " + std::to_string(space.size()));
  apply_neighborhood(space, doc, context);
  return LoadedProblem{std::move(space), std::move(table)};
}

LoadedProblem load_problem(const std::string& path) {
  return parse_problem(read_json_file(path), path);
}

LoadedFunctionSet load_function_set(const std::string& path) {
  const Json doc = read_json_file(path);
  if (!doc.is_object()) schema_error(path, "expected an object");
  nfl::SearchSpace space = parse_space(doc, path);
  const nfl::Orientation orientation = parse_orientation_field(doc, path);
  if (!doc.contains("functions")) schema_error(path, "missing \"functions\"");
  const Json& functions = doc.at("functions");
  if (!functions.is_array() || functions.empty())
    schema_error(path + ".functions", "expected a nonempty array");
  std::vector<nfl::ValueTable> tables;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const std::string context = path + ".functions[" + std::to_string(i) + "]";
    nfl::ValueTable t(parse_values(functions.at(i), context), orientation);
    if (t.size() != space.size())
      schema_error(context, "length does not match space size");
    tables.push_back(std::move(t));
  }
  apply_neighborhood(space, doc, path);
  return LoadedFunctionSet{std::move(space), nfl::FunctionSet(std::move(tables))};
}

nfl::ProblemDistribution load_distribution(const std::string& path) {
  const Json doc = read_json_file(path);
  if (!doc.is_object()) schema_error(path, "expected an object");
  const nfl::SearchSpace space = parse_space(doc, path);
  const nfl::Orientation orientation = parse_orientation_field(doc, path);
  if (!doc.contains("support")) schema_error(path, "missing \"support\"");
  const Json& support = doc.at("support");
  if (!support.is_array() || support.empty())
    schema_error(path + ".support", "expected a nonempty array");
  std::vector<nfl::WeightedTable> entries;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const std::string context = path + ".support[" + std::to_string(i) + "]";
    const Json& entry = support.at(i);
    if (!entry.is_object() || !entry.contains("values") || !entry.contains("weight"))
      schema_error(context, "expected {\"values\": ..., \"weight\": ...}");
    nfl::ValueTable t(parse_values(entry.at("values"), context + ".values"),
                      orientation);
    if (t.size() != space.size())
      schema_error(context + ".values", "length does not match space size");
    entries.push_back(nfl::WeightedTable{
        std::move(t), parse_value(entry.at("weight"), context + ".weight")});
  }
  return nfl::ProblemDistribution(std::move(entries));
}

nfl::TspInstance load_tsp(const std::string& path) {
  const Json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("cities") || !doc.contains("matrix"))
    schema_error(path, "expected {\"cities\": n, \"matrix\": [[...], ...]}");
  const long long cities = require_int(doc.at("cities"), path + ".cities");
  const Json& matrix = doc.at("matrix");
  if (!matrix.is_array()) schema_error(path + ".matrix", "expected an array");
  std::vector<std::vector<nfl::Rat>> cost;
  for (std::size_t i = 0; i < matrix.size(); ++i)
    cost.push_back(
        parse_values(matrix.at(i), path + ".matrix[" + std::to_string(i) + "]"));
  try {
    return nfl::TspInstance(static_cast<int>(cities), std::move(cost));
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

nfl::Max2SatInstance load_max2sat(const std::string& path) {
  const Json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("clauses"))
    schema_error(path, "expected {\"vars\": n, \"clauses\": [[lit, lit], ...]}");
  const long long vars = require_int(doc.at("vars"), path + ".vars");
  const Json& clauses = doc.at("clauses");
  if (!clauses.is_array()) schema_error(path + ".clauses", "expected an array");
  std::vector<nfl::Clause> parsed;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const std::string context = path + ".clauses[" + std::to_string(i) + "]";
    const Json& c = clauses.at(i);
    if (!c.is_array() || c.size() != 2)
      schema_error(context, "each clause is a pair of literals");
    nfl::Clause clause;
    nfl::Literal* lits[2] = {&clause.a, &clause.b};
    for (int k = 0; k < 2; ++k) {
      const long long lit = require_int(c.at(static_cast<std::size_t>(k)), context);
      if (lit == 0) schema_error(context, "literal 0 is not allowed (1-based)");
      lits[k]->positive = lit > 0;
      lits[k]->var = static_cast<int>((lit > 0 ? lit : -lit) - 1);
    }
    parsed.push_back(clause);
  }
  try {
    return nfl::Max2SatInstance(static_cast<int>(vars), std::move(parsed));
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

} // namespace nflab
