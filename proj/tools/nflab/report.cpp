#include "report.hpp"

#include <nfl/errors.hpp>

#include <fstream>

namespace nflab {

Json json_rational(const nfl::Rat& value) { return nfl::rational_to_string(value); }

Json json_rationals(const std::vector<nfl::Rat>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(json_rational(v));
  return out;
}

Json json_bigint(const nfl::BigInt& value) { return value.str(); }

Json json_table(const nfl::ValueTable& table) {
  Json out;
  out["orientation"] = nfl::orientation_name(table.orientation);
  out["values"] = json_rationals(table.values);
  return out;
}

Json json_metric_pair(const nfl::MetricPair& pair) {
  Json out;
  out["left"] = json_rational(pair.left);
  out["right"] = json_rational(pair.right);
  out["holds"] = pair.holds;
  return out;
}

Json json_verification(const nfl::VerificationReport& report) {
  Json out;
  out["verdict"] = report.verdict == nfl::Verdict::verified ? "verified" : "refuted";
  if (report.common_average)
    out["common_average"] = json_rational(*report.common_average);
  if (report.block_uniform) out["block_uniform"] = *report.block_uniform;
  if (report.non_uniform_signature)
    out["non_uniform_signature"] =
        json_rationals(report.non_uniform_signature->sorted_values);
  Json per_policy = Json::array();
  for (const auto& pa : report.per_policy) {
    Json row;
    row["policy"] = json_bigint(pa.policy_index);
    row["average"] = json_rational(pa.average);
    per_policy.push_back(std::move(row));
  }
  out["per_policy"] = std::move(per_policy);
  if (report.witness) {
    Json w;
    w["policy_a"] = json_bigint(report.witness->policy_a);
    w["policy_b"] = json_bigint(report.witness->policy_b);
    w["average_a"] = json_rational(report.witness->average_a);
    w["average_b"] = json_rational(report.witness->average_b);
    out["witness"] = std::move(w);
  }
  return out;
}

Json json_structure(const nfl::StructureReport& report) {
  Json out;
  if (report.locality) out["locality"] = json_metric_pair(*report.locality);
  if (report.crossover)
    out["crossover_locality"] = json_metric_pair(*report.crossover);
  if (report.steepness) out["steepness"] = json_metric_pair(*report.steepness);
  if (report.fdc) out["fdc"] = *report.fdc; // sole floating-point field
  if (report.fdc_skipped) out["fdc_skipped"] = *report.fdc_skipped;
  if (report.local_optima) out["local_optima"] = *report.local_optima;
  if (report.modularity)
    out["modularity (simplified)"] = json_rational(*report.modularity);
  if (report.skipped) out["skipped"] = *report.skipped;
  return out;
}

Json json_tour(const nfl::Tour& tour) {
  Json out = Json::array();
  for (int city : tour) out.push_back(city);
  return out;
}

Json json_matrix(const std::vector<std::vector<nfl::Rat>>& matrix) {
  Json out = Json::array();
  for (const auto& row : matrix) out.push_back(json_rationals(row));
  return out;
}

Json make_report(const std::string& claim, Json parameters,
                 const std::string& verdict) {
  Json out;
  out["claim"] = claim;
  out["parameters"] = std::move(parameters);
  out["verdict"] = verdict;
  out["witness"] = nullptr;
  out["tables"] = Json::object();
  return out;
}

void emit(const Json& report, std::ostream& out) { out << report.dump(2) << "\n"; }

void write_csv(const Json& report, const std::string& path) {
  std::ofstream file(path);
  if (!file)
    throw nfl::Error(nfl::ErrorKind::schema, "cannot open " + path + " for writing");
  const Json& tables = report.at("tables");
  if (tables.contains("per_policy")) {
    file << "policy,average\n";
    for (const auto& row : tables.at("per_policy"))
      file << row.at("policy").get<std::string>() << ","
           << row.at("average").get<std::string>() << "\n";
    return;
  }
  if (tables.contains("contestants")) {
    file << "contestant,average\n";
    for (const auto& row : tables.at("contestants"))
      file << row.at("contestant").get<std::string>() << ","
           << row.at("average").get<std::string>() << "\n";
    return;
  }
  file << "key,value\n";
  for (const auto& [key, value] : tables.items()) {
    if (value.is_string())
      file << key << "," << value.get<std::string>() << "\n";
    else if (value.is_number() || value.is_boolean())
      file << key << "," << value.dump() << "\n";
  }
}

} // namespace nflab
