#pragma once

#include <istream>
#include <set>
#include <string>
#include <utility>

#include "json.hpp"
#include "klideal/classifier.hpp"

namespace klideal {

/// FNV-1a (64-bit, hex) over a canonical rendering of the verdict, its
/// witness and its certificates. Timing never enters the digest.
std::string verdict_digest(const Verdict& verdict);

/// Full record: verdict, witness, certificates and per-generator data.
nlohmann::json to_json(const ClassificationReport& rep);

/// "v,w,verdict,digest,generators_before,generators_after,wall_ms"
std::string csv_header();
std::string csv_row(const ClassificationReport& rep);
/// The CSV fields as a single-line JSON object.
std::string jsonl_line(const ClassificationReport& rep);

enum class TableFormat { Csv, Jsonl };

/// (v, w) pairs already present in a previously written table. Unreadable
/// trailing lines (an interrupted write) are ignored.
std::set<std::pair<std::string, std::string>> completed_pairs(std::istream& in, TableFormat fmt);

}  // namespace klideal
