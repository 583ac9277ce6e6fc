#pragma once

#include <vector>

#include "klideal/minors.hpp"
#include "klideal/polynomial.hpp"
#include "klideal/zmatrix.hpp"

namespace klideal {

/// One pick per column of a minor (picks[k] lies in column cols[k]), all in
/// distinct rows.
struct Path {
  std::vector<Cell> picks;
  bool operator==(const Path&) const = default;
};

/// All paths of `m` that avoid Zero entries. Columns are filled left to
/// right, candidate rows tried in ascending order.
std::vector<Path> enumerate_nonzero_paths(const MinorSpec& m, const ZMatrix& z);

/// Sign of the permutation taking the rows of `m` in printed order (top row
/// first) to the rows picked column by column. With this convention the
/// determinant agrees with the determinant of the minor as it is printed.
int path_sign(const Path& path, const MinorSpec& m);

/// Product of the Variable picks; One picks contribute nothing.
Monomial path_monomial(const Path& path, const ZMatrix& z);

/// Signed sum over nonzero paths. Throws std::logic_error if two distinct
/// paths ever produce the same monomial.
Polynomial determinant(const MinorSpec& m, const ZMatrix& z);

/// True iff the minor has no nonzero path. Decided from the pivot structure
/// of v alone: zero row/column test first, then the column-by-column
/// feasibility cascade from each nonzero entry of the first column.
bool is_singular(const MinorSpec& m, const ZMatrix& z);

// The structural tests below read v through the bottom-to-top convention
// v'(j) = n - v(j) + 1 (the row of the One in column j), and
// v'^{-1}(i) = v^{-1}(n - i + 1) (the column of the One in row i). Callers
// pass v exactly as it defines Z^(v).

/// Zero row or zero column, from the four pivot-position conditions.
bool has_zero_row_or_col(const MinorSpec& m, const Permutation& v);

/// Whether a nonzero path can be extended column by column starting from
/// the entry at row `alpha1` of the first column, each column j_{i+1} having
/// a nonzero entry outside the rows already used. Requires that the minor has
/// no zero row or column and that (alpha1, j_1) is nonzero; throws
/// std::invalid_argument otherwise.
bool delta_conditions_hold(const MinorSpec& m, const Permutation& v, int alpha1);

/// Whether some nonzero path of `m` passes through `cell`. When the cell's
/// column holds a One inside the minor, the path must take a variable from
/// the One's row to the left of it; that row and column are peeled off and
/// the question is asked of the smaller minor. Otherwise the columns other
/// than the cell's are checked in order with the cell's row reserved.
/// Throws std::invalid_argument unless `cell` is a Variable of the minor.
bool exists_nonzero_path_through(const MinorSpec& m, const Permutation& v, Cell cell);

/// True iff some column of the minor has a One with a Variable below it
/// through which a nonzero path passes. Minors of size 1 are homogeneous.
bool is_inhomogeneous_det(const MinorSpec& m, const Permutation& v);

/// Degree slices of f, ascending degree. Throws std::invalid_argument on 0.
std::vector<Polynomial> homogeneous_components(const Polynomial& f);

}  // namespace klideal
