#pragma once

// Machine-readable output: JSON report envelopes, CSV tables, SHA-256 hashes.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "altlab/acv_geometry.hpp"
#include "altlab/det_isotypic.hpp"
#include "altlab/freeness.hpp"

namespace altlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "alternant-lab/1";
inline constexpr const char* kToolVersion = "0.3.0";

std::string sha256_hex(std::string_view data);

Json to_json(BiDegree bd);

/// Row a, column b, for every (a, b) <= cutoff.
Json table_to_json(const std::map<BiDegree, std::size_t>& table, BiDegree cutoff);

/// "a\b,0,1,..." header followed by one row per x-degree a.
std::string table_to_csv(const std::map<BiDegree, std::size_t>& table, BiDegree cutoff);

/// Exact entries as strings, matrices row-major.
Json mpoint_to_json(const MPoint<Rational>& p);
MPoint<Rational> mpoint_from_json(const Json& j);

Json to_json(const FreenessReport& rep);
Json to_json(const SurjectivityReport& rep);
Json to_json(const InjectivityReport& rep);
Json to_json(const K0Report& rep);

/// Top-level report. `body` must depend only on the configuration and the
/// seed; timing lives outside it.
struct ReportEnvelope {
  std::string command;
  std::vector<std::string> command_line;
  Json config = Json::object();
  Json body = Json::object();
  std::string verdict;
  std::map<std::string, std::string> table_hashes;
  double wall_clock_ms = 0.0;

  Json to_json() const;
  std::string dump() const { return to_json().dump(2) + "\n"; }
};

}  // namespace altlab
