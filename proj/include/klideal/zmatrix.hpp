#pragma once

#include <string>
#include <vector>

#include "klideal/permutation.hpp"
#include "klideal/polynomial.hpp"

namespace klideal {

enum class EntryKind { Zero, One, Variable };

struct ZEntry {
  EntryKind kind = EntryKind::Zero;
  Cell cell;  // the position; meaningful as an indeterminate only for Variable

  bool is_zero() const { return kind == EntryKind::Zero; }
  bool is_one() const { return kind == EntryKind::One; }
  bool is_variable() const { return kind == EntryKind::Variable; }
  bool operator==(const ZEntry&) const = default;
};

/// The structured matrix Z^(v). Rows are bottom-indexed throughout: column j
/// carries its One at row n - v(j) + 1, everything above that One (larger
/// row index) and everything right of a One in its row is Zero, and all
/// other positions are free variables z_{i,j}.
class ZMatrix {
 public:
  explicit ZMatrix(Permutation v);

  int size() const { return v_.size(); }
  const Permutation& v() const { return v_; }

  int pivot_row_of_col(int j) const { return pivot_row_[static_cast<std::size_t>(j - 1)]; }
  int pivot_col_of_row(int i) const { return pivot_col_[static_cast<std::size_t>(i - 1)]; }

  /// Throws std::out_of_range for cells outside 1..n.
  ZEntry entry(Cell c) const;
  bool is_nonzero(Cell c) const { return !entry(c).is_zero(); }

  std::vector<Cell> variables() const;

  /// Printed top row first, tokens "1", "0", "z_{i,j}", columns padded.
  std::string to_string() const;

 private:
  Permutation v_;
  std::vector<int> pivot_row_;
  std::vector<int> pivot_col_;
};

ZMatrix build_z(const Permutation& v);
ZEntry entry(const ZMatrix& z, Cell c);

/// The southwest (n-s+1) x t block Z_{s,t}: rows 1..n-s+1 (bottom-indexed),
/// columns 1..t. An index view, never a copy.
struct SouthwestWindow {
  int n = 0;
  int s = 0;
  int t = 0;

  int row_count() const { return n - s + 1; }
  int col_count() const { return t; }
  bool contains(Cell c) const { return c.row >= 1 && c.row <= row_count() && c.col >= 1 && c.col <= t; }
};

/// Throws std::out_of_range unless 1 <= s, t <= n.
SouthwestWindow southwest(const ZMatrix& z, int s, int t);

}  // namespace klideal
