#include "klideal/classifier.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "klideal/divisibility.hpp"
#include "klideal/paths.hpp"

namespace klideal {

namespace {

std::optional<Monomial> first_undivided(const Polynomial& component, const std::vector<const Polynomial*>& divisors) {
  for (const auto& [mono, c] : component.terms()) {
    (void)c;
    bool divided = false;
    for (const Polynomial* d : divisors) {
      for (const auto& [dm, dc] : d->terms()) {
        (void)dc;
        if (term_divides(dm, mono)) {
          divided = true;
          break;
        }
      }
      if (divided) break;
    }
    if (!divided) return mono;
  }
  return std::nullopt;
}

// Steps past the discard rules: prune, drop singular minors, mark the
// inhomogeneous ones.
void build_generators(ClassificationReport& rep, const ZMatrix& z) {
  const GeneratorSet pruned = pruned_defining_minors(rep.v, rep.w);
  rep.generators_after = pruned.minors.size();
  for (const MinorSpec& m : pruned.minors) {
    if (is_singular(m, z)) {
      ++rep.singular_dropped;
      continue;
    }
    GeneratorInfo g{m, determinant(m, z), is_inhomogeneous_det(m, rep.v)};
    if (g.det.is_zero()) throw std::logic_error("structurally nonsingular minor has zero determinant: " + m.to_string());
    rep.generators.push_back(std::move(g));
  }
}

Verdict run_mutations(const ClassificationReport& rep, const MutationConfig& cfg) {
  std::vector<Polynomial> polys;
  for (const GeneratorInfo& g : rep.generators) polys.push_back(g.det);
  Verdict out;
  out.kind = VerdictKind::MutationCertifiedHomogeneous;
  out.reason = "every homogeneous component reconstructed";
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    if (!rep.generators[i].inhomogeneous) continue;
    for (const Polynomial& comp : homogeneous_components(polys[i])) {
      ComponentCertificate cert{i, comp, run_mutation(comp, polys, i, cfg)};
      if (cert.outcome.kind != OutcomeKind::Terminated && out.kind != VerdictKind::Undetermined) {
        out.kind = VerdictKind::Undetermined;
        out.reason = to_string(cert.outcome.kind) + " at stage " + std::to_string(cert.outcome.stage) + " on " +
                     rep.generators[i].minor.to_string() + ": " + cert.outcome.reason;
      }
      out.certificates.push_back(std::move(cert));
    }
  }
  return out;
}

}  // namespace

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::EmptyIdeal: return "EmptyIdeal";
    case VerdictKind::UnitIdeal: return "UnitIdeal";
    case VerdictKind::KnownHomogeneous: return "KnownHomogeneous";
    case VerdictKind::Inhomogeneous: return "Inhomogeneous";
    case VerdictKind::MutationCertifiedHomogeneous: return "MutationCertifiedHomogeneous";
    case VerdictKind::Undetermined: return "Undetermined";
  }
  return "?";
}

std::optional<std::string> pattern_tag(const Permutation& v, const Permutation& w, PatternLabels labels) {
  static const Permutation p321 = Permutation::parse("321");
  static const Permutation p132 = Permutation::parse("132");
  if (labels == PatternLabels::Literal) {
    if (avoids_pattern(v, p321)) return "v-avoids-321";
    if (avoids_pattern(w, p132)) return "w-avoids-132";
    return std::nullopt;
  }
  if (avoids_pattern(complement(v), p321)) return "v-complement-avoids-321";
  if (avoids_pattern(complement(w), p132)) return "w-complement-avoids-132";
  return std::nullopt;
}

std::optional<AbstractWitness> necessary_condition_fails(const std::vector<Polynomial>& gens,
                                                         bool include_own_components) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero() || gens[i].is_homogeneous()) continue;
    const auto comps = homogeneous_components(gens[i]);
    AbstractWitness wit{i, {}};
    for (std::size_t j = 0; j < comps.size(); ++j) {
      std::vector<const Polynomial*> divisors;
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (k != i) divisors.push_back(&gens[k]);
      if (include_own_components)
        for (std::size_t k = 0; k < comps.size(); ++k)
          if (k != j) divisors.push_back(&comps[k]);
      const auto m = first_undivided(comps[j], divisors);
      if (!m) break;
      wit.per_component.push_back({comps[j], *m});
    }
    if (wit.per_component.size() == comps.size()) return wit;
  }
  return std::nullopt;
}

std::optional<InhomogeneityWitness> necessary_condition_fails(const std::vector<GeneratorInfo>& gens,
                                                              const ZMatrix& z) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].inhomogeneous) continue;
    const auto comps = homogeneous_components(gens[i].det);
    InhomogeneityWitness wit{i, gens[i].minor, {}};
    for (const Polynomial& comp : comps) {
      std::optional<Monomial> found;
      for (const auto& [mono, c] : comp.terms()) {
        (void)c;
        bool divided = false;
        for (std::size_t k = 0; k < gens.size() && !divided; ++k)
          if (k != i) divided = exists_dividing_term_structural(gens[k].minor, gens[i].minor, mono, z);
        if (!divided) {
          found = mono;
          break;
        }
      }
      if (!found) break;
      wit.per_component.push_back({comp, *found});
    }
    if (wit.per_component.size() == comps.size()) return wit;
  }
  return std::nullopt;
}

bool witness_reverifies(const InhomogeneityWitness& w, const std::vector<GeneratorInfo>& gens) {
  if (w.generator_index >= gens.size()) return false;
  const GeneratorInfo& g = gens[w.generator_index];
  if (!g.minor.same_indices(w.generator) || g.det.is_homogeneous()) return false;
  const auto comps = homogeneous_components(g.det);
  if (comps.size() != w.per_component.size()) return false;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const ComponentWitness& cw = w.per_component[j];
    if (!(cw.component == comps[j]) || cw.component.coeff(cw.monomial) == 0) return false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k == w.generator_index) continue;
      for (const auto& [mono, c] : gens[k].det.terms()) {
        (void)c;
        if (term_divides(mono, cw.monomial)) return false;
      }
    }
  }
  return true;
}

ClassificationReport classify(const Permutation& v, const Permutation& w, const ClassifierConfig& cfg) {
  if (v.size() != w.size()) throw std::invalid_argument("v and w must have the same size");
  const auto start = std::chrono::steady_clock::now();
  ClassificationReport rep;
  rep.v = v;
  rep.w = w;
  rep.generators_before = enumerate_defining_minors(v, w).minors.size();
  auto done = [&](Verdict verdict) {
    rep.verdict = std::move(verdict);
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  if (is_longest_element(w)) return done({VerdictKind::EmptyIdeal, "w is the longest element", {}, {}});
  if (!dominates(rank_matrix_tilde(v), rank_matrix_tilde(w)))
    return done({VerdictKind::UnitIdeal, "rank matrix of v exceeds that of w somewhere", {}, {}});

  std::optional<std::string> pattern;
  if (cfg.pattern_shortcut) pattern = pattern_tag(v, w, cfg.pattern_labels);
  if (pattern && !cfg.audit) return done({VerdictKind::KnownHomogeneous, *pattern, {}, {}});

  const ZMatrix z(v);
  build_generators(rep, z);
  bool any_inhomogeneous = false;
  for (const GeneratorInfo& g : rep.generators) any_inhomogeneous = any_inhomogeneous || g.inhomogeneous;

  std::optional<InhomogeneityWitness> witness;
  if (any_inhomogeneous) {
    witness = necessary_condition_fails(rep.generators, z);
    if (witness && !witness_reverifies(*witness, rep.generators))
      throw std::logic_error("inhomogeneity witness failed re-verification");
  }

  if (pattern) {
    rep.audit_ran = true;
    rep.audit_consistent = !witness;
    if (witness) return done({VerdictKind::Inhomogeneous, "contradicts " + *pattern, witness, {}});
    return done({VerdictKind::KnownHomogeneous, *pattern, {}, {}});
  }
  if (!any_inhomogeneous) return done({VerdictKind::KnownHomogeneous, "all-generators-homogeneous", {}, {}});
  if (witness) return done({VerdictKind::Inhomogeneous, "necessary condition fails", witness, {}});
  return done(run_mutations(rep, cfg.mutation));
}

std::vector<ClassificationReport> sweep(int n, const ClassifierConfig& cfg, const SweepOptions& opts) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > opts.max_n)
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the sweep limit " + std::to_string(opts.max_n));
  const auto perms = all_permutations(n);
  std::vector<std::pair<const Permutation*, const Permutation*>> pairs;
  for (const Permutation& v : perms)
    for (const Permutation& w : perms)
      if (!opts.skip.count({v.to_string(), w.to_string()})) pairs.emplace_back(&v, &w);

  std::vector<ClassificationReport> out(pairs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= pairs.size()) return;
      try {
        out[k] = classify(*pairs[k].first, *pairs[k].second, cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = pairs.size();
      }
    }
  };
  const unsigned workers = std::max(1u, opts.workers);
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < workers; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace klideal
