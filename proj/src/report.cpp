#include "klideal/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

namespace klideal {

namespace {

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Minimal CSV splitter for our own rows (quoted fields, doubled quotes).
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

nlohmann::json outcome_json(const MutationOutcome& o) {
  nlohmann::json j;
  j["outcome"] = to_string(o.kind);
  j["stage"] = o.stage;
  j["reason"] = o.reason;
  j["nodes"] = o.nodes;
  if (o.kind == OutcomeKind::Terminated) {
    nlohmann::json cert = nlohmann::json::array();
    for (const Polynomial& g : o.certificate) cert.push_back(g.to_string());
    j["multipliers"] = cert;
  }
  return j;
}

}  // namespace

std::string verdict_digest(const Verdict& verdict) {
  std::ostringstream text;
  text << to_string(verdict.kind) << '|' << verdict.reason;
  if (verdict.witness) {
    text << "|witness " << verdict.witness->generator.to_string();
    for (const ComponentWitness& cw : verdict.witness->per_component) text << ';' << cw.monomial.to_string();
  }
  for (const ComponentCertificate& c : verdict.certificates) {
    text << "|cert " << c.generator_index << ' ' << c.component.to_string() << ' ' << to_string(c.outcome.kind) << ' '
         << c.outcome.stage;
    for (const Polynomial& g : c.outcome.certificate) text << ';' << g.to_string();
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text.str()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

nlohmann::json to_json(const ClassificationReport& rep) {
  nlohmann::json j;
  j["v"] = rep.v.to_string();
  j["w"] = rep.w.to_string();
  j["verdict"] = to_string(rep.verdict.kind);
  j["reason"] = rep.verdict.reason;
  j["digest"] = verdict_digest(rep.verdict);
  j["generators_before"] = rep.generators_before;
  j["generators_after"] = rep.generators_after;
  j["singular_dropped"] = rep.singular_dropped;
  j["wall_ms"] = rep.wall_ms;
  if (rep.audit_ran) j["audit_consistent"] = rep.audit_consistent;

  nlohmann::json gens = nlohmann::json::array();
  for (const GeneratorInfo& g : rep.generators) {
    gens.push_back({{"minor", g.minor.to_string()},
                    {"determinant", g.det.to_string()},
                    {"degrees", g.det.degrees()},
                    {"inhomogeneous", g.inhomogeneous}});
  }
  j["generators"] = gens;

  if (const auto& w = rep.verdict.witness) {
    nlohmann::json comps = nlohmann::json::array();
    for (const ComponentWitness& cw : w->per_component)
      comps.push_back({{"component", cw.component.to_string()}, {"undivided_monomial", cw.monomial.to_string()}});
    j["witness"] = {{"generator", w->generator.to_string()}, {"components", comps}};
  }
  if (!rep.verdict.certificates.empty()) {
    nlohmann::json certs = nlohmann::json::array();
    for (const ComponentCertificate& c : rep.verdict.certificates) {
      nlohmann::json cj = outcome_json(c.outcome);
      cj["generator"] = rep.generators.at(c.generator_index).minor.to_string();
      cj["component"] = c.component.to_string();
      certs.push_back(cj);
    }
    j["mutation"] = certs;
  }
  return j;
}

std::string csv_header() { return "v,w,verdict,digest,generators_before,generators_after,wall_ms"; }

std::string csv_row(const ClassificationReport& rep) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", rep.wall_ms);
  std::ostringstream out;
  out << csv_field(rep.v.to_string()) << ',' << csv_field(rep.w.to_string()) << ',' << to_string(rep.verdict.kind)
      << ',' << verdict_digest(rep.verdict) << ',' << rep.generators_before << ',' << rep.generators_after << ','
      << ms;
  return out.str();
}

std::string jsonl_line(const ClassificationReport& rep) {
  nlohmann::json j;
  j["v"] = rep.v.to_string();
  j["w"] = rep.w.to_string();
  j["verdict"] = to_string(rep.verdict.kind);
  j["digest"] = verdict_digest(rep.verdict);
  j["generators_before"] = rep.generators_before;
  j["generators_after"] = rep.generators_after;
  j["wall_ms"] = rep.wall_ms;
  return j.dump();
}

std::set<std::pair<std::string, std::string>> completed_pairs(std::istream& in, TableFormat fmt) {
  std::set<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (fmt == TableFormat::Csv) {
      if (line == csv_header()) continue;
      const auto fields = split_csv(line);
      if (fields.size() != 7) continue;
      out.emplace(fields[0], fields[1]);
    } else {
      const auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("v") || !j.contains("w")) continue;
      out.emplace(j["v"].get<std::string>(), j["w"].get<std::string>());
    }
  }
  return out;
}

}  // namespace klideal
