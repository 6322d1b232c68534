#pragma once

#include <nfl/counterexamples.hpp>
#include <nfl/metrics.hpp>
#include <nfl/rational.hpp>
#include <nfl/value_table.hpp>
#include <nfl/verifier.hpp>

#include <json.hpp>

#include <ostream>
#include <string>

namespace nflab {

// Reports must be byte-identical across runs and thread counts, so every
// object keeps its insertion order and every rational is a "p/q" string.
using Json = nlohmann::ordered_json;

Json json_rational(const nfl::Rat& value);
Json json_rationals(const std::vector<nfl::Rat>& values);
Json json_bigint(const nfl::BigInt& value);
Json json_table(const nfl::ValueTable& table);
Json json_metric_pair(const nfl::MetricPair& pair);
Json json_verification(const nfl::VerificationReport& report);
Json json_structure(const nfl::StructureReport& report);
Json json_tour(const nfl::Tour& tour);
Json json_matrix(const std::vector<std::vector<nfl::Rat>>& matrix);

// The single report document: claim, parameters, verdict, witness, tables.
Json make_report(const std::string& claim, Json parameters, const std::string& verdict);

void emit(const Json& report, std::ostream& out);

// CSV export: per-policy averages when the report has them, otherwise the
// scalar entries of the tables section as key,value rows.
void write_csv(const Json& report, const std::string& path);

} // namespace nflab
