#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "klideal/report.hpp"

using namespace klideal;

TEST_SUITE("report") {
  TEST_CASE("csv header and row") {
    CHECK(csv_header() == "v,w,verdict,digest,generators_before,generators_after,wall_ms");
    const ClassificationReport rep = classify(Permutation::parse("123"), Permutation::parse("321"));
    const std::string row = csv_row(rep);
    CHECK(row.rfind("123,321,EmptyIdeal,", 0) == 0);
    CHECK(std::count(row.begin(), row.end(), ',') == 6);
  }

  TEST_CASE("digest is stable and separates verdicts") {
    const Verdict a{VerdictKind::UnitIdeal, "x", {}, {}};
    const Verdict b{VerdictKind::EmptyIdeal, "x", {}, {}};
    CHECK(verdict_digest(a) == verdict_digest(a));
    CHECK(verdict_digest(a).size() == 16);
    CHECK(verdict_digest(a) != verdict_digest(b));
  }

  TEST_CASE("json fields") {
    ClassifierConfig cfg;
    cfg.pattern_shortcut = false;
    const nlohmann::json j = to_json(classify(Permutation::parse("123"), Permutation::parse("312"), cfg));
    for (const char* key : {"v", "w", "verdict", "reason", "digest", "generators_before", "generators_after",
                            "singular_dropped", "wall_ms", "generators", "witness"})
      CHECK(j.contains(key));
    CHECK(j["verdict"] == "Inhomogeneous");
    const nlohmann::json line = nlohmann::json::parse(jsonl_line(classify(Permutation::parse("12"), Permutation::parse("21"))));
    CHECK(line["verdict"] == "EmptyIdeal");
  }

  TEST_CASE("completed pairs round trip") {
    const auto reps = sweep(2, {});
    std::ostringstream csv, jsonl;
    csv << csv_header() << '\n';
    for (const auto& r : reps) {
      csv << csv_row(r) << '\n';
      jsonl << jsonl_line(r) << '\n';
    }
    std::set<std::pair<std::string, std::string>> expected;
    for (const auto& r : reps) expected.insert({r.v.to_string(), r.w.to_string()});
    std::istringstream a(csv.str()), b(jsonl.str());
    CHECK(completed_pairs(a, TableFormat::Csv) == expected);
    CHECK(completed_pairs(b, TableFormat::Jsonl) == expected);
    std::istringstream empty("");
    CHECK(completed_pairs(empty, TableFormat::Csv).empty());
  }
}
