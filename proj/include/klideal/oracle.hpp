#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "klideal/minors.hpp"
#include "klideal/permutation.hpp"
#include "klideal/polynomial.hpp"
#include "klideal/zmatrix.hpp"

// Brute-force reference implementations. Nothing here calls the path engine,
// the window walk or the structural divisibility code; entries of Z^(v) are
// recomputed from v directly.
namespace klideal::oracle {

/// Entry of Z^(v) as a polynomial: 0, 1 or the variable.
Polynomial entry(const Permutation& v, Cell c);

/// Cofactor expansion along the first column of the minor as printed (top
/// row first). Throws std::length_error for p > 8.
Polynomial laplace_determinant(const MinorSpec& m, const ZMatrix& z);
Polynomial laplace_determinant(const MinorSpec& m, const Permutation& v);

/// Row assignments (one row per column, as cells) avoiding Zero entries,
/// found by trying every permutation of the rows.
std::vector<std::vector<Cell>> nonzero_paths(const MinorSpec& m, const Permutation& v);

bool singular(const MinorSpec& m, const Permutation& v);
bool zero_row_or_col(const MinorSpec& m, const Permutation& v);
/// Some nonzero path picks row `alpha1` in the first column.
bool path_from(const MinorSpec& m, const Permutation& v, int alpha1);
bool path_through(const MinorSpec& m, const Permutation& v, Cell c);

/// Some term of det(a) divides m_b, by expanding det(a).
bool divides_some_term(const MinorSpec& a, const Monomial& m_b, const Permutation& v);

/// Every defining minor, windows and subsets scanned by bitmask.
std::vector<MinorSpec> defining_minors(const Permutation& v, const Permutation& w);

/// Windows s for column t kept after pairwise dominance (equal rank with the
/// window above, or a rank drop into the window below) and admissibility.
/// Requires n <= 6.
std::vector<int> si(const Permutation& w, int t);

struct DegreeRow {
  MinorSpec minor;
  std::set<int> degrees;
};
/// Term degrees of each pruned generator, from Laplace expansion. n <= 6.
std::vector<DegreeRow> homogeneity_table(const Permutation& v, const Permutation& w);

struct Mismatch {
  std::string operation;
  std::string input;
  std::string fast;
  std::string oracle;
};

struct OracleReport {
  std::size_t checked = 0;
  std::map<std::string, std::size_t> checked_by_operation;
  std::vector<Mismatch> mismatches;
  /// Counters that are reported but never fail the report.
  std::map<std::string, std::size_t> notes;

  bool pass() const { return mismatches.empty(); }
  std::size_t mismatches_for(const std::string& op) const;
  void check(const std::string& op, bool agree, const std::string& input, const std::string& fast,
             const std::string& oracle);
  void merge(const OracleReport& o);
};

/// Window walk against si(), and the rank formula, for every w in S_n.
void verify_windows(int n, OracleReport& rep);
/// Determinant, singularity, zero row/column, path-from, path-through,
/// inhomogeneity and the two determinant observations on every pruned minor
/// of every pair in S_n x S_n.
void verify_minors(int n, OracleReport& rep);
/// Structural divisibility against expansion for every ordered pair of
/// distinct nonsingular pruned generators and every term of the dividend.
void verify_divisibility(int n, OracleReport& rep);
/// Unit/empty discard rules, pattern consistency and witness soundness.
void verify_classifier(int n, OracleReport& rep);

/// All of the above. Throws std::length_error for n > 4.
OracleReport verify(int n);

}  // namespace klideal::oracle
