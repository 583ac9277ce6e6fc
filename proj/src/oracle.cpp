#include "klideal/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "klideal/classifier.hpp"
#include "klideal/divisibility.hpp"
#include "klideal/paths.hpp"

namespace klideal::oracle {

namespace {

using Grid = std::vector<std::vector<Polynomial>>;

Polynomial det_rec(const Grid& g, std::vector<std::size_t>& rows, std::size_t col) {
  if (rows.empty()) return Polynomial::constant(1);
  Polynomial out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t r = rows[k];
    if (g[r][col].is_zero()) continue;
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial term = g[r][col] * det_rec(g, rows, col + 1);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(k), r);
    out += (k % 2 == 0) ? term : -term;
  }
  return out;
}

int rank_count(const Permutation& w, int p, int q) {
  int r = 0;
  for (int k = 1; k <= q; ++k)
    if (w(k) >= p) ++r;
  return r;
}

std::vector<int> bits(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i + 1);
  return out;
}

bool is_one_at(const Permutation& v, Cell c) { return c.row == v.size() - v(c.col) + 1; }

std::string pair_text(const Permutation& v, const Permutation& w) {
  return "v=" + v.to_string() + " w=" + w.to_string();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void check_observations(OracleReport& rep, const Polynomial& det, const std::string& input) {
  const bool constant = det.coeff(Monomial{}) != 0;
  rep.check("observation_constant_term", !constant || det.is_unit(), input, det.to_string(), "no constant term");
  const auto terms = det.term_list();
  bool divides = false;
  for (std::size_t a = 0; a < terms.size() && !divides; ++a)
    for (std::size_t b = 0; b < terms.size() && !divides; ++b)
      if (a != b && !terms[a].mono.is_one() && terms[a].mono.divides(terms[b].mono)) divides = true;
  rep.check("observation_term_division", !divides, input, det.to_string(), "no term divides another");
}

bool witness_exists_brute(const std::vector<Polynomial>& dets) {
  for (std::size_t i = 0; i < dets.size(); ++i) {
    if (dets[i].is_homogeneous()) continue;
    std::map<int, std::vector<Monomial>> comps;
    for (const auto& [m, c] : dets[i].terms()) comps[m.degree()].push_back(m);
    bool every = true;
    for (const auto& [deg, monos] : comps) {
      bool some_free = false;
      for (const Monomial& m : monos) {
        bool divided = false;
        for (std::size_t k = 0; k < dets.size() && !divided; ++k)
          if (k != i)
            for (const auto& [dm, dc] : dets[k].terms())
              if (dm.divides(m)) divided = true;
        if (!divided) some_free = true;
      }
      if (!some_free) every = false;
    }
    if (every) return true;
  }
  return false;
}

}  // namespace

Polynomial entry(const Permutation& v, Cell c) {
  const int n = v.size();
  if (c.row < 1 || c.row > n || c.col < 1 || c.col > n) throw std::out_of_range("cell outside the matrix");
  const int one_row = n - v(c.col) + 1;
  if (c.row > one_row) return {};
  if (c.row == one_row) return Polynomial::constant(1);
  int one_col = 0;
  for (int j = 1; j <= n; ++j)
    if (n - v(j) + 1 == c.row) one_col = j;
  if (c.col > one_col) return {};
  return Polynomial::variable(c);
}

Polynomial laplace_determinant(const MinorSpec& m, const Permutation& v) {
  validate_minor(m, v.size());
  if (m.size() > 8) throw std::length_error("laplace_determinant is limited to minors of size 8");
  Grid g;
  for (auto r = m.rows.rbegin(); r != m.rows.rend(); ++r) {
    std::vector<Polynomial> row;
    for (int c : m.cols) row.push_back(entry(v, {*r, c}));
    g.push_back(std::move(row));
  }
  std::vector<std::size_t> rows(g.size());
  std::iota(rows.begin(), rows.end(), 0);
  return det_rec(g, rows, 0);
}

Polynomial laplace_determinant(const MinorSpec& m, const ZMatrix& z) { return laplace_determinant(m, z.v()); }

std::vector<std::vector<Cell>> nonzero_paths(const MinorSpec& m, const Permutation& v) {
  validate_minor(m, v.size());
  std::vector<std::size_t> perm(m.rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Cell>> out;
  do {
    std::vector<Cell> path;
    bool ok = true;
    for (std::size_t k = 0; k < perm.size() && ok; ++k) {
      const Cell c{m.rows[perm[k]], m.cols[k]};
      ok = !entry(v, c).is_zero();
      path.push_back(c);
    }
    if (ok) out.push_back(std::move(path));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool singular(const MinorSpec& m, const Permutation& v) { return nonzero_paths(m, v).empty(); }

bool zero_row_or_col(const MinorSpec& m, const Permutation& v) {
  for (int r : m.rows) {
    bool all_zero = true;
    for (int c : m.cols) all_zero = all_zero && entry(v, {r, c}).is_zero();
    if (all_zero) return true;
  }
  for (int c : m.cols) {
    bool all_zero = true;
    for (int r : m.rows) all_zero = all_zero && entry(v, {r, c}).is_zero();
    if (all_zero) return true;
  }
  return false;
}

bool path_from(const MinorSpec& m, const Permutation& v, int alpha1) {
  for (const auto& p : nonzero_paths(m, v))
    if (p.front().row == alpha1) return true;
  return false;
}

bool path_through(const MinorSpec& m, const Permutation& v, Cell c) {
  for (const auto& p : nonzero_paths(m, v))
    if (std::find(p.begin(), p.end(), c) != p.end()) return true;
  return false;
}

bool divides_some_term(const MinorSpec& a, const Monomial& m_b, const Permutation& v) {
  const Polynomial det = laplace_determinant(a, v);
  for (const auto& [mono, c] : det.terms())
    if (mono.divides(m_b)) return true;
  return false;
}

std::vector<MinorSpec> defining_minors(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("v and w must have the same size");
  const int n = w.size();
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<MinorSpec> out;
  for (int t = 1; t <= n; ++t) {
    for (int s = 1; s <= n; ++s) {
      const int p = rank_count(w, s, t) + 1;
      if (p > std::min(n - s + 1, t)) continue;
      for (unsigned rm = 1; rm < (1u << (n - s + 1)); ++rm) {
        if (__builtin_popcount(rm) != p) continue;
        for (unsigned cm = 1; cm < (1u << t); ++cm) {
          if (__builtin_popcount(cm) != p) continue;
          auto key = std::make_pair(bits(rm), bits(cm));
          if (seen.insert(key).second) out.push_back({key.first, key.second, {}});
        }
      }
    }
  }
  return out;
}

std::vector<int> si(const Permutation& w, int t) {
  const int n = w.size();
  if (n > 6) throw std::length_error("si oracle is limited to n <= 6");
  if (t < 1 || t > n) throw std::out_of_range("column index out of range");
  std::vector<int> out;
  for (int s = 1; s <= n; ++s) {
    const int r = rank_count(w, s, t);
    bool dominated = false;
    for (int o = 1; o <= n && !dominated; ++o) {
      const int ro = rank_count(w, o, t);
      if (o == s - 1 && ro == r) dominated = true;      // same size, larger window
      if (o == s + 1 && ro == r - 1) dominated = true;  // smaller minors, one row fewer
    }
    if (!dominated && r + 1 <= std::min(n - s + 1, t)) out.push_back(s);
  }
  return out;
}

std::vector<DegreeRow> homogeneity_table(const Permutation& v, const Permutation& w) {
  if (v.size() > 6) throw std::length_error("homogeneity_table is limited to n <= 6");
  std::vector<DegreeRow> out;
  for (const MinorSpec& m : pruned_defining_minors(v, w).minors) {
    DegreeRow row{m, {}};
    const Polynomial det = laplace_determinant(m, v);
    for (const auto& [mono, c] : det.terms()) row.degrees.insert(mono.degree());
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t OracleReport::mismatches_for(const std::string& op) const {
  return static_cast<std::size_t>(
      std::count_if(mismatches.begin(), mismatches.end(), [&](const Mismatch& m) { return m.operation == op; }));
}

void OracleReport::check(const std::string& op, bool agree, const std::string& input, const std::string& fast,
                         const std::string& oracle) {
  ++checked;
  ++checked_by_operation[op];
  if (!agree) mismatches.push_back({op, input, fast, oracle});
}

void OracleReport::merge(const OracleReport& o) {
  checked += o.checked;
  for (const auto& [k, c] : o.checked_by_operation) checked_by_operation[k] += c;
  for (const auto& [k, c] : o.notes) notes[k] += c;
  mismatches.insert(mismatches.end(), o.mismatches.begin(), o.mismatches.end());
}

void verify_windows(int n, OracleReport& rep) {
  for (const Permutation& w : all_permutations(n)) {
    rep.check("rank_formula", rank_matrix_via_minima(w) == rank_matrix_tilde(w), "w=" + w.to_string(),
              rank_matrix_via_minima(w).to_string(), rank_matrix_tilde(w).to_string());
    for (int t = 1; t <= n; ++t) {
      const auto fast = relevant_rows_for_column(w, t);
      const auto slow = si(w, t);
      auto text = [](const std::vector<int>& xs) {
        std::string s;
        for (int x : xs) s += std::to_string(x) + " ";
        return s;
      };
      rep.check("si", fast == slow, "w=" + w.to_string() + " t=" + std::to_string(t), text(fast), text(slow));
    }
  }
}

void verify_minors(int n, OracleReport& rep) {
  const auto perms = all_permutations(n);
  for (const Permutation& v : perms) {
    const ZMatrix z(v);
    for (const Permutation& w : perms) {
      for (const MinorSpec& m : pruned_defining_minors(v, w).minors) {
        const std::string input = pair_text(v, w) + " " + m.to_string();
        const Polynomial slow = laplace_determinant(m, v);
        const Polynomial fast = determinant(m, z);
        rep.check("determinant", fast == slow, input, fast.to_string(), slow.to_string());
        check_observations(rep, slow, input);

        const bool sing = singular(m, v);
        rep.check("is_singular", is_singular(m, z) == sing && sing == slow.is_zero(), input,
                  yes_no(is_singular(m, z)), yes_no(sing));
        const bool zrc = zero_row_or_col(m, v);
        rep.check("has_zero_row_or_col", has_zero_row_or_col(m, v) == zrc, input, yes_no(has_zero_row_or_col(m, v)),
                  yes_no(zrc));
        if (!zrc) {
          for (int a : m.rows) {
            if (entry(v, {a, m.cols.front()}).is_zero()) continue;
            const bool f = delta_conditions_hold(m, v, a);
            const bool s = path_from(m, v, a);
            rep.check("delta_conditions_hold", f == s, input + " alpha1=" + std::to_string(a), yes_no(f), yes_no(s));
          }
        }
        for (int r : m.rows) {
          for (int c : m.cols) {
            const Cell cell{r, c};
            const Polynomial e = entry(v, cell);
            if (e.is_zero() || is_one_at(v, cell)) continue;
            const bool f = exists_nonzero_path_through(m, v, cell);
            const bool s = path_through(m, v, cell);
            rep.check("exists_nonzero_path_through", f == s, input + " " + to_string(cell), yes_no(f), yes_no(s));
          }
        }
        const bool inh = !slow.is_zero() && slow.degrees().size() > 1;
        rep.check("is_inhomogeneous_det", is_inhomogeneous_det(m, v) == inh, input, yes_no(is_inhomogeneous_det(m, v)),
                  yes_no(inh));
      }
    }
  }
}

void verify_divisibility(int n, OracleReport& rep) {
  const auto perms = all_permutations(n);
  for (const Permutation& v : perms) {
    const ZMatrix z(v);
    const RankMatrix rv = rank_matrix_tilde(v);
    for (const Permutation& w : perms) {
      if (is_longest_element(w) || !dominates(rv, rank_matrix_tilde(w))) continue;
      std::vector<MinorSpec> gens;
      std::vector<Polynomial> dets;
      for (const MinorSpec& m : pruned_defining_minors(v, w).minors) {
        Polynomial d = laplace_determinant(m, v);
        if (d.is_zero()) continue;
        gens.push_back(m);
        dets.push_back(std::move(d));
      }
      for (std::size_t b = 0; b < gens.size(); ++b) {
        for (std::size_t a = 0; a < gens.size(); ++a) {
          if (a == b) continue;
          for (const auto& [m_b, c] : dets[b].terms()) {
            const bool fast = exists_dividing_term_structural(gens[a], gens[b], m_b, z);
            const bool slow = divides_some_term(gens[a], m_b, v);
            rep.check("divisibility", fast == slow,
                      pair_text(v, w) + " A=" + gens[a].to_string() + " B=" + gens[b].to_string() + " m_B=" +
                          m_b.to_string(),
                      yes_no(fast), yes_no(slow));
            if (dividing_shape_condition(gens[a], m_b, z) && !slow) ++rep.notes["shape_condition_without_divisor"];
            if (gens[a].is_subminor_of(gens[b])) ++rep.notes["divisor_is_subminor"];
          }
        }
      }
    }
  }
}

void verify_classifier(int n, OracleReport& rep) {
  const auto perms = all_permutations(n);
  ClassifierConfig audited;
  audited.audit = true;
  ClassifierConfig plain;
  plain.pattern_shortcut = false;
  for (const Permutation& v : perms) {
    for (const Permutation& w : perms) {
      const std::string input = pair_text(v, w);
      const auto full = defining_minors(v, w);
      const auto fast_full = enumerate_defining_minors(v, w).minors;
      bool same = full.size() == fast_full.size();
      for (const MinorSpec& m : fast_full)
        same = same && std::any_of(full.begin(), full.end(), [&](const MinorSpec& o) { return o.same_indices(m); });
      rep.check("enumerate_defining_minors", same, input, std::to_string(fast_full.size()),
                std::to_string(full.size()));

      bool unit_det = false;
      for (const MinorSpec& m : full) {
        const Polynomial d = laplace_determinant(m, v);
        check_observations(rep, d, input + " " + m.to_string());
        unit_det = unit_det || d.is_unit();
      }
      const bool dom = dominates(rank_matrix_tilde(v), rank_matrix_tilde(w));
      const ClassificationReport a = classify(v, w, audited);
      const ClassificationReport b = classify(v, w, plain);

      rep.check("empty_ideal", full.empty() == is_longest_element(w) && (a.verdict.kind == VerdictKind::EmptyIdeal) == full.empty(),
                input, to_string(a.verdict.kind), yes_no(full.empty()));
      if (!is_longest_element(w)) {
        const bool unit = a.verdict.kind == VerdictKind::UnitIdeal;
        rep.check("unit_ideal", unit == unit_det && unit_det == !dom, input, yes_no(unit),
                  std::string("unit det ") + yes_no(unit_det) + ", dominates " + yes_no(dom));
      }

      if (pattern_tag(v, w, PatternLabels::Literal) && b.verdict.kind == VerdictKind::Inhomogeneous)
        ++rep.notes["literal_pattern_reading_contradicted"];
      if (pattern_tag(v, w, PatternLabels::Complemented)) {
        const bool ok = a.verdict.kind != VerdictKind::Inhomogeneous && a.audit_consistent &&
                        b.verdict.kind != VerdictKind::Inhomogeneous;
        rep.check("pattern_consistency", ok, input, to_string(b.verdict.kind), "not Inhomogeneous");
      }

      if (b.verdict.kind == VerdictKind::EmptyIdeal || b.verdict.kind == VerdictKind::UnitIdeal) continue;
      std::vector<Polynomial> dets;
      for (const GeneratorInfo& g : b.generators) dets.push_back(laplace_determinant(g.minor, v));
      const bool brute = witness_exists_brute(dets);
      rep.check("necessary_condition", brute == (b.verdict.kind == VerdictKind::Inhomogeneous), input,
                to_string(b.verdict.kind), yes_no(brute));
      if (const auto& wit = b.verdict.witness) {
        bool sound = true;
        for (const ComponentWitness& cw : wit->per_component)
          for (std::size_t k = 0; k < dets.size(); ++k)
            if (k != wit->generator_index)
              for (const auto& [dm, dc] : dets[k].terms()) sound = sound && !dm.divides(cw.monomial);
        rep.check("witness", sound, input, wit->generator.to_string(), "undivided monomials");
      }
      for (const ComponentCertificate& c : b.verdict.certificates) {
        if (c.outcome.kind != OutcomeKind::Terminated) continue;
        rep.check("certificate", verify_certificate(c.component, dets, c.outcome.certificate), input,
                  c.component.to_string(), "sum g f == target");
      }
    }
  }
}

OracleReport verify(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 4) throw std::length_error("verify is limited to n <= 4");
  OracleReport rep;
  verify_windows(n, rep);
  verify_minors(n, rep);
  verify_divisibility(n, rep);
  verify_classifier(n, rep);
  return rep;
}

}  // namespace klideal::oracle
