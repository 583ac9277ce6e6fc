#include "klideal/mutation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "klideal/divisibility.hpp"

namespace klideal {

namespace {

constexpr std::size_t kTraceLimit = 256;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow in mutation");
  return out;
}

Monomial product(const std::vector<Monomial>& ms) {
  Monomial out;
  for (const Monomial& m : ms) out = out * m;
  return out;
}

bool shares_no_variable(const Monomial& a, const Monomial& b) { return monomial_set_difference(a, b) == a; }

bool shares_no_row_or_col(const Monomial& a, const Monomial& b) {
  std::set<int> rows, cols;
  for (const Cell& c : b.vars()) {
    rows.insert(c.row);
    cols.insert(c.col);
  }
  for (const Cell& c : a.vars())
    if (rows.count(c.row) || cols.count(c.col)) return false;
  return true;
}

struct Divisor {
  std::size_t gen;
  Monomial term;
  std::int64_t coeff;
};

void log(MutationState& st, std::string line) {
  if (st.trace.size() < kTraceLimit) st.trace.push_back(std::move(line));
}

std::vector<Divisor> divisors_of(const MutationState& st, const StageTerm& e) {
  const Monomial value = e.value();
  std::vector<Divisor> out;
  for (std::size_t r = 0; r < st.gens.size(); ++r) {
    if (!e.tail && st.owner && r == *st.owner) continue;
    for (const auto& [mono, c] : st.gens[r].terms()) {
      if (!mono.divides(value) || e.coeff % c != 0) continue;
      if (e.tail && r == *e.tail_generator && mono == *e.tail) continue;
      out.push_back({r, mono, c});
    }
  }
  return out;
}

void note_match(MutationState& st, const StageTerm& a, const StageTerm& b) {
  ++st.diagnostics.cancellations;
  if (!a.tail || !b.tail) return;
  const Monomial m = a.multiplier(), n = b.multiplier();
  if (!shares_no_variable(m, *a.tail) || !shares_no_variable(n, *b.tail)) return;
  ++st.diagnostics.fact2_checked;
  if (!disjoint_product_identity_holds(m, *a.tail, n, *b.tail)) ++st.diagnostics.fact2_violations;
}

bool cancel_against(MutationState& st, std::vector<StageTerm>& pool, const StageTerm& t) {
  const Monomial value = t.value();
  for (auto it = pool.begin(); it != pool.end(); ++it) {
    if (it->coeff == -t.coeff && it->value() == value) {
      note_match(st, t, *it);
      pool.erase(it);
      return true;
    }
  }
  return false;
}

void place(MutationState& st, StageTerm t) {
  if (cancel_against(st, st.pending, t)) return;
  if (cancel_against(st, st.generated, t)) return;
  st.generated.push_back(std::move(t));
}

void cancel_within_generated(MutationState& st) {
  auto& g = st.generated;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].coeff == -g[j].coeff && g[i].value() == g[j].value()) {
        note_match(st, g[i], g[j]);
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
        --i;
        break;
      }
    }
  }
}

// Adds the multiplier term that absorbs `e` through divisor `d`. Returns the
// reason when the footnote rule forbids it.
std::optional<std::string> resolve(MutationState& st, const StageTerm& e, const Divisor& d) {
  const Monomial u = e.value() / d.term;
  const std::int64_t u_coeff = -(e.coeff / d.coeff);
  Polynomial& g = st.multipliers[d.gen];
  const std::int64_t existing = g.coeff(u);
  if (existing != 0 && (existing > 0) != (u_coeff > 0))
    return "multiplier term " + u.to_string() + " of generator " + std::to_string(d.gen) + " would cancel";
  g.add_term(u, u_coeff);
  log(st, "stage " + std::to_string(st.stage) + ": g" + std::to_string(d.gen) + " += " + std::to_string(u_coeff) +
              "*" + u.to_string());

  if (!e.tail) {
    for (const auto& [mono, c] : st.gens[d.gen].terms()) {
      (void)c;
      ++st.diagnostics.disjointness_checked;
      if (!shares_no_row_or_col(u, mono)) ++st.diagnostics.disjointness_violations;
    }
  }

  std::vector<Monomial> numerator = e.numerator;
  if (e.tail) numerator.push_back(*e.tail);
  std::vector<Monomial> denominator = e.denominator;
  denominator.push_back(d.term);
  for (const auto& [mono, c] : st.gens[d.gen].terms()) {
    if (mono == d.term) continue;
    StageTerm t;
    t.coeff = checked_mul(u_coeff, c);
    t.numerator = numerator;
    t.denominator = denominator;
    t.stage = st.stage;
    t.tail = mono;
    t.tail_generator = d.gen;
    place(st, std::move(t));
  }
  return std::nullopt;
}

MutationOutcome finish(const MutationState& st, OutcomeKind kind, std::string reason) {
  MutationOutcome out;
  out.kind = kind;
  out.stage = st.stage;
  out.reason = std::move(reason);
  out.diagnostics = st.diagnostics;
  out.trace = st.trace;
  if (kind == OutcomeKind::Terminated) {
    out.certificate = st.multipliers;
    if (!verify_certificate(st.target, st.gens, out.certificate))
      throw std::logic_error("terminated mutation produced an invalid certificate");
  }
  return out;
}

MutationState initial_state(const Polynomial& target, const std::vector<Polynomial>& gens,
                            std::optional<std::size_t> owner) {
  if (target.is_zero()) throw std::invalid_argument("mutation target must be nonzero");
  if (owner && *owner >= gens.size()) throw std::out_of_range("owner index out of range");
  MutationState st;
  st.target = target;
  st.gens = gens;
  st.owner = owner;
  st.multipliers.assign(gens.size(), Polynomial{});
  for (const auto& [mono, c] : target.terms()) {
    StageTerm t;
    t.coeff = -c;
    t.numerator = {mono};
    t.stage = 0;
    st.pending.push_back(std::move(t));
  }
  return st;
}

// Resolves every pending term with its first admissible divisor.
std::optional<MutationOutcome> resolve_pending_greedily(MutationState& st) {
  while (!st.pending.empty()) {
    const StageTerm e = st.pending.front();
    st.pending.erase(st.pending.begin());
    const auto cands = divisors_of(st, e);
    if (cands.empty())
      return finish(st, OutcomeKind::AbruptStop, "no admissible divisor for " + e.value().to_string());
    if (auto why = resolve(st, e, cands.front())) return finish(st, OutcomeKind::AbruptStop, *why);
  }
  return std::nullopt;
}

// Stage boundary: returns a final outcome or advances to the next stage.
std::optional<MutationOutcome> close_stage(MutationState& st, const MutationConfig& cfg) {
  cancel_within_generated(st);
  st.check_invariant();
  if (st.generated.empty()) return finish(st, OutcomeKind::Terminated, "no generated terms remain");
  if (st.stage >= cfg.depth_limit) return finish(st, OutcomeKind::DepthExhausted, "depth limit reached");
  ++st.stage;
  st.pending = std::move(st.generated);
  st.generated.clear();
  return std::nullopt;
}

MutationOutcome explore(MutationState st, const MutationConfig& cfg, std::size_t& nodes) {
  while (true) {
    if (st.pending.empty()) {
      if (auto done = close_stage(st, cfg)) return *done;
      continue;
    }
    if (st.pending.size() + st.generated.size() > cfg.max_outstanding)
      return finish(st, OutcomeKind::DepthExhausted, "outstanding term cap reached");
    const StageTerm e = st.pending.front();
    st.pending.erase(st.pending.begin());
    const auto cands = divisors_of(st, e);
    if (cands.empty())
      return finish(st, OutcomeKind::AbruptStop, "no admissible divisor for " + e.value().to_string());
    if (cfg.branch_strategy == BranchStrategy::Greedy || cands.size() == 1) {
      if (auto why = resolve(st, e, cands.front())) return finish(st, OutcomeKind::AbruptStop, *why);
      continue;
    }
    std::optional<MutationOutcome> best;
    for (const Divisor& d : cands) {
      if (nodes >= cfg.branch_budget) break;
      ++nodes;
      MutationState child = st;
      MutationOutcome o;
      if (auto why = resolve(child, e, d))
        o = finish(child, OutcomeKind::AbruptStop, *why);
      else
        o = explore(std::move(child), cfg, nodes);
      if (!best || outcome_strength(o.kind) > outcome_strength(best->kind)) best = std::move(o);
      if (best->kind == OutcomeKind::Terminated) break;
    }
    if (!best) return finish(st, OutcomeKind::DepthExhausted, "branch budget exhausted");
    return *best;
  }
}

}  // namespace

Monomial StageTerm::multiplier() const { return product(numerator) / product(denominator); }

Monomial StageTerm::value() const { return tail ? multiplier() * *tail : multiplier(); }

void MutationState::check_invariant() const {
  Polynomial lhs;
  for (std::size_t k = 0; k < gens.size(); ++k) lhs += multipliers[k] * gens[k];
  Polynomial rhs = target;
  for (const auto* pool : {&pending, &generated})
    for (const StageTerm& t : *pool) rhs.add_term(t.value(), t.coeff);
  if (!(lhs == rhs)) throw std::logic_error("mutation bookkeeping identity failed at stage " + std::to_string(stage));
}

std::string to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Terminated: return "Terminated";
    case OutcomeKind::AbruptStop: return "AbruptStop";
    case OutcomeKind::DepthExhausted: return "DepthExhausted";
  }
  return "?";
}

int outcome_strength(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Terminated: return 2;
    case OutcomeKind::AbruptStop: return 1;
    case OutcomeKind::DepthExhausted: return 0;
  }
  return -1;
}

std::variant<MutationState, MutationOutcome> stage0_setup(const Polynomial& target, const std::vector<Polynomial>& gens,
                                                          std::optional<std::size_t> owner) {
  MutationState st = initial_state(target, gens, owner);
  if (auto stop = resolve_pending_greedily(st)) return *stop;
  st.check_invariant();
  return st;
}

std::variant<MutationState, MutationOutcome> mutation_step(MutationState state, const MutationConfig& cfg) {
  if (auto stop = resolve_pending_greedily(state)) return *stop;
  if (auto done = close_stage(state, cfg)) return *done;
  if (auto stop = resolve_pending_greedily(state)) return *stop;
  state.check_invariant();
  return state;
}

MutationOutcome run_mutation(const Polynomial& target, const std::vector<Polynomial>& gens,
                             std::optional<std::size_t> owner, const MutationConfig& cfg) {
  if (cfg.depth_limit < 0) throw std::invalid_argument("depth_limit must be non-negative");
  std::size_t nodes = 0;
  MutationOutcome out = explore(initial_state(target, gens, owner), cfg, nodes);
  out.nodes = nodes;
  return out;
}

bool verify_certificate(const Polynomial& target, const std::vector<Polynomial>& gens,
                        const std::vector<Polynomial>& certificate) {
  if (certificate.size() != gens.size()) return false;
  Polynomial sum;
  for (std::size_t k = 0; k < gens.size(); ++k) sum += certificate[k] * gens[k];
  return sum == target;
}

}  // namespace klideal
