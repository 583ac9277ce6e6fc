#include "klideal/zmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klideal {

ZMatrix::ZMatrix(Permutation v) : v_(std::move(v)) {
  const int n = v_.size();
  pivot_row_.resize(static_cast<std::size_t>(n));
  pivot_col_.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int row = n - v_(j) + 1;
    pivot_row_[static_cast<std::size_t>(j - 1)] = row;
    pivot_col_[static_cast<std::size_t>(row - 1)] = j;
  }
}

ZEntry ZMatrix::entry(Cell c) const {
  const int n = size();
  if (c.row < 1 || c.row > n || c.col < 1 || c.col > n)
    throw std::out_of_range("cell " + klideal::to_string(c) + " outside " + std::to_string(n) + "x" +
                            std::to_string(n) + " matrix");
  const int pivot_row = pivot_row_of_col(c.col);
  if (c.row == pivot_row) return {EntryKind::One, c};
  if (c.row > pivot_row || c.col > pivot_col_of_row(c.row)) return {EntryKind::Zero, c};
  return {EntryKind::Variable, c};
}

std::vector<Cell> ZMatrix::variables() const {
  std::vector<Cell> out;
  for (int i = 1; i <= size(); ++i)
    for (int j = 1; j <= size(); ++j)
      if (entry({i, j}).is_variable()) out.push_back({i, j});
  return out;
}

std::string ZMatrix::to_string() const {
  const int n = size();
  std::vector<std::vector<std::string>> tokens;
  std::vector<std::size_t> width(static_cast<std::size_t>(n), 1);
  for (int i = n; i >= 1; --i) {
    auto& row = tokens.emplace_back();
    for (int j = 1; j <= n; ++j) {
      const ZEntry e = entry({i, j});
      row.push_back(e.is_one() ? "1" : e.is_zero() ? "0" : klideal::to_string(e.cell));
      width[static_cast<std::size_t>(j - 1)] = std::max(width[static_cast<std::size_t>(j - 1)], row.back().size());
    }
  }
  std::ostringstream out;
  for (const auto& row : tokens) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << row[j];
      if (j + 1 < row.size()) out << std::string(width[j] - row[j].size() + 1, ' ');
    }
    out << '\n';
  }
  return out.str();
}

ZMatrix build_z(const Permutation& v) { return ZMatrix(v); }

ZEntry entry(const ZMatrix& z, Cell c) { return z.entry(c); }

SouthwestWindow southwest(const ZMatrix& z, int s, int t) {
  const int n = z.size();
  if (s < 1 || s > n || t < 1 || t > n)
    throw std::out_of_range("window (" + std::to_string(s) + "," + std::to_string(t) + ") out of range");
  return {n, s, t};
}

}  // namespace klideal
