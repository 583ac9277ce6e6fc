#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klideal/minors.hpp"
#include "klideal/mutation.hpp"
#include "klideal/permutation.hpp"
#include "klideal/polynomial.hpp"

namespace klideal {

enum class VerdictKind { EmptyIdeal, UnitIdeal, KnownHomogeneous, Inhomogeneous, MutationCertifiedHomogeneous, Undetermined };

std::string to_string(VerdictKind k);

struct ComponentWitness {
  Polynomial component;
  Monomial monomial;  // first term of `component` with no divisor elsewhere
};

struct InhomogeneityWitness {
  std::size_t generator_index = 0;
  MinorSpec generator;
  std::vector<ComponentWitness> per_component;
};

struct ComponentCertificate {
  std::size_t generator_index = 0;
  Polynomial component;
  MutationOutcome outcome;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Undetermined;
  /// Pattern tag (see pattern_tag) or "all-generators-homogeneous" for
  /// KnownHomogeneous; a short explanation otherwise.
  std::string reason;
  std::optional<InhomogeneityWitness> witness;
  /// Mutation runs, one per component of every inhomogeneous generator.
  std::vector<ComponentCertificate> certificates;
};

/// How the 321/132 avoidance criterion is matched to (v, w). Z^(v) here is
/// the row flip of the matrix in which that criterion is usually stated, so
/// the criterion applies to the complements w0*v and w0*w. `Literal` tests v
/// and w themselves and is kept only for comparison; it is not sound here.
enum class PatternLabels { Complemented, Literal };

/// The avoidance condition under the chosen labels, or nullopt. Tags are
/// "v-complement-avoids-321", "w-complement-avoids-132", "v-avoids-321",
/// "w-avoids-132".
std::optional<std::string> pattern_tag(const Permutation& v, const Permutation& w, PatternLabels labels);

struct ClassifierConfig {
  bool pattern_shortcut = true;
  PatternLabels pattern_labels = PatternLabels::Complemented;
  /// With the shortcut on, still run the structural pipeline and record
  /// whether it contradicts the pattern verdict.
  bool audit = false;
  MutationConfig mutation;
};

struct GeneratorInfo {
  MinorSpec minor;
  Polynomial det;
  bool inhomogeneous = false;
};

struct ClassificationReport {
  Permutation v;
  Permutation w;
  Verdict verdict;
  std::size_t generators_before = 0;  // all defining minors
  std::size_t generators_after = 0;   // pruned minors
  std::size_t singular_dropped = 0;
  std::vector<GeneratorInfo> generators;  // pruned, nonsingular, in order
  bool audit_ran = false;
  bool audit_consistent = true;
  double wall_ms = 0.0;
};

/// Homogeneity necessary condition on an abstract generator list: the index
/// of the first inhomogeneous generator each of whose homogeneous components
/// has a monomial divisible by no term of any other generator. When
/// `include_own_components` is set, terms of the generator's other
/// components also count as divisors.
struct AbstractWitness {
  std::size_t generator_index = 0;
  std::vector<ComponentWitness> per_component;
};
std::optional<AbstractWitness> necessary_condition_fails(const std::vector<Polynomial>& gens,
                                                         bool include_own_components = false);

/// KL version over nonsingular generators with their expanded determinants.
/// Divisibility by another generator is decided structurally, without
/// expanding the divisor.
std::optional<InhomogeneityWitness> necessary_condition_fails(const std::vector<GeneratorInfo>& gens,
                                                              const ZMatrix& z);

/// Re-checks a witness term by term against the expanded generators.
bool witness_reverifies(const InhomogeneityWitness& w, const std::vector<GeneratorInfo>& gens);

/// Throws std::invalid_argument on a size mismatch.
ClassificationReport classify(const Permutation& v, const Permutation& w, const ClassifierConfig& cfg = {});

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepOptions {
  int max_n = 5;
  unsigned workers = 1;
  /// (v, w) pairs, as permutation strings, to leave out.
  std::set<std::pair<std::string, std::string>> skip;
};

/// All pairs of S_n x S_n in lexicographic order of (v, w), classified
/// across `workers` threads. Throws ResourceLimitError when n > max_n.
std::vector<ClassificationReport> sweep(int n, const ClassifierConfig& cfg, const SweepOptions& opts = {});

}  // namespace klideal
