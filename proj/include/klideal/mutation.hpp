#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "klideal/polynomial.hpp"

namespace klideal {

enum class BranchStrategy {
  Greedy,     // first divisor in canonical order, no backtracking
  Backtrack,  // depth-first over divisor choices, bounded by branch_budget
};

struct MutationConfig {
  int depth_limit = 8;
  BranchStrategy branch_strategy = BranchStrategy::Backtrack;
  std::size_t branch_budget = 256;
  std::size_t max_outstanding = 4096;
};

/// A signed stage term: coeff · prod(numerator) / prod(denominator) · tail.
/// Entries still waiting at stage 0 are the negated target terms, which carry
/// a single numerator monomial and nothing else.
struct StageTerm {
  std::int64_t coeff = 0;
  std::vector<Monomial> numerator;
  std::vector<Monomial> denominator;
  int stage = 0;
  std::optional<Monomial> tail;
  std::optional<std::size_t> tail_generator;

  /// The multiplier part prod(numerator) / prod(denominator).
  Monomial multiplier() const;
  /// multiplier() · tail.
  Monomial value() const;
};

struct MutationDiagnostics {
  std::size_t cancellations = 0;
  std::size_t fact2_checked = 0;
  std::size_t fact2_violations = 0;
  std::size_t disjointness_checked = 0;
  std::size_t disjointness_violations = 0;
};

/// Σ multipliers[k]·gens[k] == target + Σ (pending ∪ generated) at all times.
struct MutationState {
  Polynomial target;
  std::vector<Polynomial> gens;
  std::optional<std::size_t> owner;
  std::vector<Polynomial> multipliers;
  std::vector<StageTerm> pending;    // awaiting a divisor in the current stage
  std::vector<StageTerm> generated;  // produced during the current stage
  int stage = 0;
  std::vector<std::string> trace;
  MutationDiagnostics diagnostics;

  /// Throws std::logic_error when the bookkeeping identity fails.
  void check_invariant() const;
};

enum class OutcomeKind { Terminated, AbruptStop, DepthExhausted };

std::string to_string(OutcomeKind k);

struct MutationOutcome {
  OutcomeKind kind = OutcomeKind::DepthExhausted;
  int stage = 0;
  std::string reason;
  std::vector<Polynomial> certificate;  // filled for Terminated
  std::size_t nodes = 0;
  MutationDiagnostics diagnostics;
  std::vector<std::string> trace;
};

/// Higher is stronger: Terminated > AbruptStop > DepthExhausted.
int outcome_strength(OutcomeKind k);

/// Resolves every target term with the first admissible divisor taken from
/// generators other than `owner`. Leaves the generated terms in
/// state.generated for mutation_step.
std::variant<MutationState, MutationOutcome> stage0_setup(const Polynomial& target, const std::vector<Polynomial>& gens,
                                                          std::optional<std::size_t> owner = std::nullopt);

/// One greedy step: cancel the generated terms against each other, stop when
/// none remain or the depth limit is reached, otherwise resolve every
/// generated term and advance the stage.
std::variant<MutationState, MutationOutcome> mutation_step(MutationState state, const MutationConfig& cfg);

/// Full procedure with divisor-choice search per cfg.branch_strategy.
MutationOutcome run_mutation(const Polynomial& target, const std::vector<Polynomial>& gens,
                             std::optional<std::size_t> owner, const MutationConfig& cfg);

/// Σ certificate[k]·gens[k] == target.
bool verify_certificate(const Polynomial& target, const std::vector<Polynomial>& gens,
                        const std::vector<Polynomial>& certificate);

}  // namespace klideal
