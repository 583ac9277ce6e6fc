#include "klideal/paths.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace klideal {

namespace {

// Pivot positions of Z^(v) in the bottom-to-top convention.
class PivotView {
 public:
  explicit PivotView(const Permutation& v) : n_(v.size()), inv_(inverse(v)), v_(v) {}

  int n() const { return n_; }
  // Row of the One in column j.
  int row_of(int j) const { return n_ - v_(j) + 1; }
  // Column of the One in row i.
  int col_of(int i) const { return inv_(n_ - i + 1); }
  bool nonzero(int i, int j) const { return i <= row_of(j) && col_of(i) >= j; }

 private:
  int n_;
  Permutation inv_;
  Permutation v_;
};

// Column `col` has no nonzero entry among the rows not marked in `used`
// (indexed by position in m.rows). Written as the pivot-position case split:
//   (0) the One lies below every row of the minor;
//   (1) the One lies above every row, and every unused row has its own One
//       left of `col`;
//   (2) the One sits on a used row i_{s0}, and every unused row below it has
//       its One left of `col`;
//   (3) the One falls strictly between rows i_{s0} and i_{s0+1}, and every
//       unused row up to i_{s0} has its One left of `col`.
bool column_blocked(const PivotView& pv, const MinorSpec& m, int col, const std::vector<bool>& used) {
  const auto& rows = m.rows;
  const std::size_t p = rows.size();
  const int pivot = pv.row_of(col);
  auto unused_left_of_col_through = [&](std::size_t last_exclusive) {
    for (std::size_t s = 0; s < last_exclusive; ++s)
      if (!used[s] && pv.col_of(rows[s]) >= col) return false;
    return true;
  };

  if (pivot < rows.front()) return true;                                     // (0)
  if (pivot > rows.back()) return unused_left_of_col_through(p);             // (1)
  for (std::size_t s0 = 0; s0 < p; ++s0) {
    if (rows[s0] == pivot) return used[s0] && unused_left_of_col_through(s0);  // (2)
    if (s0 + 1 < p && rows[s0] < pivot && pivot < rows[s0 + 1])
      return unused_left_of_col_through(s0 + 1);                              // (3)
  }
  return false;
}

std::vector<std::size_t> column_candidates(const PivotView& pv, const MinorSpec& m, int col,
                                           const std::vector<bool>& used) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < m.rows.size(); ++s)
    if (!used[s] && pv.nonzero(m.rows[s], col)) out.push_back(s);
  return out;
}

// Depth-first extension across the columns in `order`, starting at order[k].
// The case split decides whether a column is open; the entry rule supplies
// the concrete rows to branch on. The two must agree.
bool extend(const PivotView& pv, const MinorSpec& m, const std::vector<std::size_t>& order, std::size_t k,
            std::vector<bool>& used) {
  if (k == order.size()) return true;
  const int col = m.cols[order[k]];
  const bool blocked = column_blocked(pv, m, col, used);
  const auto cands = column_candidates(pv, m, col, used);
  if (blocked != cands.empty()) throw std::logic_error("column case split disagrees with entry rule");
  if (blocked) return false;
  for (std::size_t s : cands) {
    used[s] = true;
    const bool ok = extend(pv, m, order, k + 1, used);
    used[s] = false;
    if (ok) return true;
  }
  return false;
}

std::size_t row_position(const MinorSpec& m, int row) {
  auto it = std::lower_bound(m.rows.begin(), m.rows.end(), row);
  return static_cast<std::size_t>(it - m.rows.begin());
}

MinorSpec without(const MinorSpec& m, int row, int col) {
  MinorSpec out;
  for (int r : m.rows)
    if (r != row) out.rows.push_back(r);
  for (int c : m.cols)
    if (c != col) out.cols.push_back(c);
  return out;
}

bool path_through(const PivotView& pv, const MinorSpec& m, Cell cell) {
  if (m.size() == 1) return true;
  const int one_row = pv.row_of(cell.col);
  if (std::binary_search(m.rows.begin(), m.rows.end(), one_row)) {
    // The path cannot take the One (it already uses this column), so it
    // takes some variable of that row, necessarily left of the One.
    for (int j0 : m.cols) {
      if (j0 >= cell.col) break;
      if (pv.nonzero(one_row, j0) && path_through(pv, without(m, one_row, j0), cell)) return true;
    }
    return false;
  }
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < m.cols.size(); ++k)
    if (m.cols[k] != cell.col) order.push_back(k);
  std::vector<bool> used(m.rows.size(), false);
  used[row_position(m, cell.row)] = true;
  return extend(pv, m, order, 0, used);
}

void paths_from(const MinorSpec& m, const ZMatrix& z, std::size_t k, std::vector<bool>& used, Path& current,
                std::vector<Path>& out) {
  if (k == m.cols.size()) {
    out.push_back(current);
    return;
  }
  for (std::size_t s = 0; s < m.rows.size(); ++s) {
    if (used[s]) continue;
    const Cell c{m.rows[s], m.cols[k]};
    if (z.entry(c).is_zero()) continue;
    used[s] = true;
    current.picks.push_back(c);
    paths_from(m, z, k + 1, used, current, out);
    current.picks.pop_back();
    used[s] = false;
  }
}

}  // namespace

std::vector<Path> enumerate_nonzero_paths(const MinorSpec& m, const ZMatrix& z) {
  validate_minor(m, z.size());
  std::vector<Path> out;
  std::vector<bool> used(m.rows.size(), false);
  Path current;
  paths_from(m, z, 0, used, current, out);
  return out;
}

int path_sign(const Path& path, const MinorSpec& m) {
  // Printed position of each picked row: the top row (largest index) is 0.
  const std::size_t p = m.rows.size();
  std::vector<std::size_t> pos;
  for (const Cell& c : path.picks) pos.push_back(p - 1 - row_position(m, c.row));
  int inversions = 0;
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a + 1; b < pos.size(); ++b)
      if (pos[a] > pos[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Monomial path_monomial(const Path& path, const ZMatrix& z) {
  std::vector<Cell> vars;
  for (const Cell& c : path.picks)
    if (z.entry(c).is_variable()) vars.push_back(c);
  return Monomial(std::move(vars));
}

Polynomial determinant(const MinorSpec& m, const ZMatrix& z) {
  Polynomial det;
  std::set<std::vector<Cell>> seen;
  for (const Path& path : enumerate_nonzero_paths(m, z)) {
    Monomial mono = path_monomial(path, z);
    if (!seen.insert(mono.vars()).second)
      throw std::logic_error("two nonzero paths share a monomial in " + m.to_string());
    det.add_term(mono, path_sign(path, m));
  }
  return det;
}

bool is_singular(const MinorSpec& m, const ZMatrix& z) {
  validate_minor(m, z.size());
  if (m.size() == 1) return z.entry({m.rows[0], m.cols[0]}).is_zero();
  if (has_zero_row_or_col(m, z.v())) return true;
  const PivotView pv(z.v());
  for (int alpha1 : m.rows)
    if (pv.nonzero(alpha1, m.cols[0]) && delta_conditions_hold(m, z.v(), alpha1)) return false;
  return true;
}

bool has_zero_row_or_col(const MinorSpec& m, const Permutation& v) {
  validate_minor(m, v.size());
  const PivotView pv(v);
  const auto& rows = m.rows;
  const auto& cols = m.cols;
  const int i1 = rows.front();
  const int j1 = cols.front();

  // Zero column: (1) the One lies below every selected row; (3) the One lies
  // between or above the selected rows and each selected row beneath it has
  // its own One further left.
  for (int j : cols) {
    const int pivot = pv.row_of(j);
    if (pivot < i1) return true;
    bool all_left = true;
    bool on_row = false;
    for (int r : rows) {
      if (r == pivot) on_row = true;
      if (r < pivot && pv.col_of(r) >= j) all_left = false;
    }
    if (!on_row && all_left) return true;
  }
  // Zero row: (2) the row's One lies left of every selected column; (4) it
  // lies between or right of the selected columns and each selected column
  // to its left has its One below this row.
  for (int r : rows) {
    const int pivot_col = pv.col_of(r);
    if (pivot_col < j1) return true;
    bool all_below = true;
    bool on_col = false;
    for (int j : cols) {
      if (j == pivot_col) on_col = true;
      if (j < pivot_col && pv.row_of(j) >= r) all_below = false;
    }
    if (!on_col && all_below) return true;
  }
  return false;
}

bool delta_conditions_hold(const MinorSpec& m, const Permutation& v, int alpha1) {
  if (has_zero_row_or_col(m, v)) throw std::invalid_argument("minor has a zero row or column");
  const PivotView pv(v);
  if (!std::binary_search(m.rows.begin(), m.rows.end(), alpha1) || !pv.nonzero(alpha1, m.cols[0]))
    throw std::invalid_argument("alpha1 must be the row of a nonzero entry in the first column");
  std::vector<std::size_t> order;
  for (std::size_t k = 1; k < m.cols.size(); ++k) order.push_back(k);
  std::vector<bool> used(m.rows.size(), false);
  used[row_position(m, alpha1)] = true;
  return extend(pv, m, order, 0, used);
}

bool exists_nonzero_path_through(const MinorSpec& m, const Permutation& v, Cell cell) {
  validate_minor(m, v.size());
  if (!m.contains(cell)) throw std::invalid_argument(to_string(cell) + " is not in " + m.to_string());
  const PivotView pv(v);
  if (!pv.nonzero(cell.row, cell.col) || pv.row_of(cell.col) == cell.row)
    throw std::invalid_argument(to_string(cell) + " is not a variable entry");
  return path_through(pv, m, cell);
}

bool is_inhomogeneous_det(const MinorSpec& m, const Permutation& v) {
  validate_minor(m, v.size());
  if (m.size() < 2) return false;
  const PivotView pv(v);
  for (int col : m.cols) {
    const int one_row = pv.row_of(col);
    if (!std::binary_search(m.rows.begin(), m.rows.end(), one_row)) continue;
    for (int r : m.rows) {
      if (r >= one_row) break;
      if (pv.nonzero(r, col) && exists_nonzero_path_through(m, v, {r, col})) return true;
    }
  }
  return false;
}

std::vector<Polynomial> homogeneous_components(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no homogeneous components");
  std::map<int, Polynomial> by_degree;
  for (const auto& [mono, c] : f.terms()) by_degree[mono.degree()].add_term(mono, c);
  std::vector<Polynomial> out;
  for (auto& [d, p] : by_degree) out.push_back(std::move(p));
  return out;
}

}  // namespace klideal
