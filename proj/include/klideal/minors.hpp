#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klideal/permutation.hpp"
#include "klideal/zmatrix.hpp"

namespace klideal {

/// A square submatrix of Z^(v): strictly increasing bottom-indexed rows and
/// strictly increasing columns of equal length. `source_windows` lists every
/// southwest window (s, t) the minor was drawn from.
struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<std::pair<int, int>> source_windows;

  int size() const { return static_cast<int>(rows.size()); }
  bool contains(Cell c) const;
  bool same_indices(const MinorSpec& o) const { return rows == o.rows && cols == o.cols; }
  /// Same rows/cols ⊆ the other's rows/cols.
  bool is_subminor_of(const MinorSpec& o) const;

  /// "rows{1,2} cols{1,3}"
  std::string to_string() const;
};

/// Throws std::invalid_argument unless `m` is a well-formed minor of an n x n matrix.
void validate_minor(const MinorSpec& m, int n);

/// The matrix of entries of `m` printed top row first.
std::string render_minor(const MinorSpec& m, const ZMatrix& z);

struct GeneratorSet {
  Permutation v;
  Permutation w;
  std::vector<MinorSpec> minors;
};

/// r~_{s,t} + 1 when that size fits the (n-s+1) x t window, absent otherwise.
std::optional<int> required_minor_size(const Permutation& w, int s, int t);

/// Every defining minor over every window, windows scanned t ascending then
/// s ascending, subsets in colex order (columns outer, rows inner). A minor
/// reached from several windows is kept once, at its first position.
GeneratorSet enumerate_defining_minors(const Permutation& v, const Permutation& w);

/// Window indices s for column t that survive the redundancy walk on the
/// t-th column of R~_w, before the admissibility filter. Ascending.
///
/// The walk goes upward block by block: start from the block of equal
/// entries touching the bottom row, then repeatedly jump to the nearest
/// block above whose length is at least two, keeping each block's topmost
/// row. A block of length one that sits directly above a drop is implied by
/// the window below it; every non-top row of a block is implied by the
/// block's top row.
std::vector<int> si_sequence(const Permutation& w, int t);

/// si_sequence filtered down to admissible windows.
std::vector<int> relevant_rows_for_column(const Permutation& w, int t);

/// Defining minors of the relevant windows only, same ordering rules as
/// enumerate_defining_minors.
GeneratorSet pruned_defining_minors(const Permutation& v, const Permutation& w);

/// k-subsets of {1..m} in colexicographic order.
std::vector<std::vector<int>> colex_subsets(int m, int k);

}  // namespace klideal
