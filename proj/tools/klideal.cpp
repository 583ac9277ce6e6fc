#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "klideal/classifier.hpp"
#include "klideal/minors.hpp"
#include "klideal/oracle.hpp"
#include "klideal/paths.hpp"
#include "klideal/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInvalidInput = 2;
constexpr int kResourceLimit = 3;

using namespace klideal;

void print_text(const ClassificationReport& rep) {
  std::cout << "v = " << rep.v.to_string() << ", w = " << rep.w.to_string() << '\n'
            << "verdict: " << to_string(rep.verdict.kind) << " (" << rep.verdict.reason << ")\n"
            << "digest: " << verdict_digest(rep.verdict) << '\n'
            << "generators: " << rep.generators_before << " before pruning, " << rep.generators_after
            << " after, " << rep.singular_dropped << " singular dropped\n";
  if (const auto& w = rep.verdict.witness) {
    std::cout << "witness generator " << w->generator.to_string() << '\n';
    for (const ComponentWitness& cw : w->per_component)
      std::cout << "  degree " << cw.monomial.degree() << ": " << cw.monomial.to_string() << " has no divisor\n";
  }
  for (const ComponentCertificate& c : rep.verdict.certificates) {
    std::cout << "mutation on " << rep.generators[c.generator_index].minor.to_string()
              << " component " << c.component.to_string() << ": " << to_string(c.outcome.kind) << " at stage "
              << c.outcome.stage << '\n';
    if (c.outcome.kind == OutcomeKind::Terminated) {
      for (std::size_t k = 0; k < c.outcome.certificate.size(); ++k)
        if (!c.outcome.certificate[k].is_zero())
          std::cout << "  g[" << rep.generators[k].minor.to_string() << "] = " << c.outcome.certificate[k].to_string()
                    << '\n';
    } else {
      std::cout << "  " << c.outcome.reason << '\n';
    }
  }
  if (rep.audit_ran) std::cout << "audit: " << (rep.audit_consistent ? "consistent" : "CONTRADICTION") << '\n';
}

void print_show(const Permutation& v, const Permutation& w) {
  const ZMatrix z(v);
  std::cout << "Z^(v) for v = " << v.to_string() << " (top row first):\n" << z.to_string() << '\n';
  std::cout << "R~_w for w = " << w.to_string() << ":\n" << rank_matrix_tilde(w).to_string() << '\n';
  std::cout << "relevant windows:";
  for (int t = 1; t <= w.size(); ++t)
    for (int s : relevant_rows_for_column(w, t)) std::cout << " (s=" << s << ",t=" << t << ")";
  std::cout << '\n';
  const GeneratorSet full = enumerate_defining_minors(v, w);
  const GeneratorSet pruned = pruned_defining_minors(v, w);
  std::cout << "defining minors: " << full.minors.size() << ", after pruning: " << pruned.minors.size() << "\n\n";
  for (const MinorSpec& m : pruned.minors) {
    std::cout << m.to_string() << '\n' << render_minor(m, z);
    if (is_singular(m, z)) {
      std::cout << "  singular\n\n";
      continue;
    }
    const Polynomial d = determinant(m, z);
    std::cout << "  det = " << d.to_string() << '\n'
              << "  " << (is_inhomogeneous_det(m, v) ? "inhomogeneous" : "homogeneous") << ", degrees";
    for (int deg : d.degrees()) std::cout << ' ' << deg;
    std::cout << "\n\n";
  }
}

TableFormat format_for(const std::string& path, const std::string& requested) {
  if (requested == "csv") return TableFormat::Csv;
  if (requested == "jsonl") return TableFormat::Jsonl;
  if (!requested.empty()) throw std::invalid_argument("unknown format: " + requested);
  return path.size() >= 6 && path.substr(path.size() - 6) == ".jsonl" ? TableFormat::Jsonl : TableFormat::Csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classifier for Kazhdan-Lusztig ideals"};
  app.require_subcommand(1);

  std::string v_text, w_text;
  bool no_shortcut = false, audit = false, json = false, literal_labels = false;
  int depth = MutationConfig{}.depth_limit;
  std::size_t budget = MutationConfig{}.branch_budget;

  auto* classify_cmd = app.add_subcommand("classify", "Classify one pair (v, w)");
  classify_cmd->add_option("--v", v_text, "permutation v, e.g. 2314")->required();
  classify_cmd->add_option("--w", w_text, "permutation w, e.g. 4213")->required();
  classify_cmd->add_flag("--no-pattern-shortcut", no_shortcut, "skip the 321/132 avoidance shortcut");
  classify_cmd->add_flag("--literal-pattern-labels", literal_labels,
                         "apply the avoidance shortcut to v and w instead of their complements");
  classify_cmd->add_flag("--audit", audit, "run the structural pipeline even when the shortcut applies");
  classify_cmd->add_option("--mutation-depth", depth, "mutation depth limit")->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--branch-budget", budget, "mutation backtracking budget");
  classify_cmd->add_flag("--json", json, "print the full report as JSON");

  int n = 3;
  std::string out_path, format;
  unsigned workers = 1;
  bool resume = false;
  int max_n = SweepOptions{}.max_n;
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every pair in S_n x S_n");
  sweep_cmd->add_option("--n", n, "permutation size")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", out_path, "output table (.csv or .jsonl); stdout when omitted");
  sweep_cmd->add_option("--format", format, "csv or jsonl (default: from the file extension)");
  sweep_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--resume", resume, "skip pairs already present in --out and append");
  sweep_cmd->add_option("--max-n", max_n, "largest n accepted");
  sweep_cmd->add_flag("--no-pattern-shortcut", no_shortcut, "skip the 321/132 avoidance shortcut");
  sweep_cmd->add_option("--mutation-depth", depth, "mutation depth limit")->check(CLI::NonNegativeNumber);

  auto* show_cmd = app.add_subcommand("show", "Print Z^(v), R~_w and the pruned minors");
  show_cmd->add_option("--v", v_text, "permutation v")->required();
  show_cmd->add_option("--w", w_text, "permutation w")->required();

  int verify_n = 3;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check fast paths against the brute-force oracle");
  verify_cmd->add_option("--n", verify_n, "permutation size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    ClassifierConfig cfg;
    cfg.pattern_shortcut = !no_shortcut;
    cfg.audit = audit;
    cfg.pattern_labels = literal_labels ? PatternLabels::Literal : PatternLabels::Complemented;
    cfg.mutation.depth_limit = depth;
    cfg.mutation.branch_budget = budget;

    if (*classify_cmd) {
      const Permutation v = Permutation::parse(v_text);
      const Permutation w = Permutation::parse(w_text);
      const ClassificationReport rep = classify(v, w, cfg);
      if (json)
        std::cout << to_json(rep).dump(2) << '\n';
      else
        print_text(rep);
      return kOk;
    }

    if (*show_cmd) {
      const Permutation v = Permutation::parse(v_text);
      const Permutation w = Permutation::parse(w_text);
      if (v.size() != w.size()) throw std::invalid_argument("v and w must have the same size");
      print_show(v, w);
      return kOk;
    }

    if (*sweep_cmd) {
      if (resume && out_path.empty()) throw std::invalid_argument("--resume needs --out");
      const TableFormat fmt = format_for(out_path, format);
      SweepOptions opts;
      opts.max_n = max_n;
      opts.workers = workers;
      bool write_header = fmt == TableFormat::Csv;
      if (resume) {
        std::ifstream in(out_path);
        if (in) {
          opts.skip = completed_pairs(in, fmt);
          write_header = write_header && opts.skip.empty() && in.peek() == std::ifstream::traits_type::eof();
        }
      }
      const auto reports = sweep(n, cfg, opts);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path, resume ? std::ios::app : std::ios::trunc);
        if (!file) throw std::invalid_argument("cannot open " + out_path);
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      if (write_header) out << csv_header() << '\n';
      std::map<std::string, std::size_t> counts;
      for (const auto& rep : reports) {
        out << (fmt == TableFormat::Csv ? csv_row(rep) : jsonl_line(rep)) << '\n';
        ++counts[to_string(rep.verdict.kind)];
      }
      std::cerr << reports.size() << " pairs classified (" << opts.skip.size() << " skipped)\n";
      for (const auto& [k, c] : counts) std::cerr << "  " << k << ": " << c << '\n';
      return kOk;
    }

    if (*verify_cmd) {
      const oracle::OracleReport rep = oracle::verify(verify_n);
      for (const auto& [op, c] : rep.checked_by_operation)
        std::cout << op << ": " << c << " checked, " << rep.mismatches_for(op) << " mismatches\n";
      for (const auto& [k, c] : rep.notes) std::cout << "note " << k << ": " << c << '\n';
      for (const auto& m : rep.mismatches)
        std::cout << "MISMATCH " << m.operation << " [" << m.input << "] fast=" << m.fast << " oracle=" << m.oracle
                  << '\n';
      std::cout << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checked << " checks)\n";
      return rep.pass() ? kOk : kMismatch;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::length_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}
