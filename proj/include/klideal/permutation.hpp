#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace klideal {

/// A permutation of {1..n} in one-line notation. All indices and values are
/// 1-based at this boundary: p(i) is the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// w0 = n n-1 ... 1
  static Permutation longest(int n);
  /// Accepts "4213" for n <= 9 and "10,3,1,..." (comma separated) for any n.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word() const { return word_; }

  /// Inverse of `parse`: plain digits for n <= 9, comma separated above.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

Permutation inverse(const Permutation& p);

/// All of S_n in lexicographic order of the one-line word.
std::vector<Permutation> all_permutations(int n);

bool is_longest_element(const Permutation& w);

/// i -> n + 1 - p(i), that is w0 * p.
Permutation complement(const Permutation& p);

/// Relative-order pattern containment check. Only the patterns 321 and 132
/// are supported; anything else throws std::invalid_argument.
bool avoids_pattern(const Permutation& p, const Permutation& pattern);

/// n x n grid of non-negative integers. Entry (p, q) has p counted from the
/// top row and q from the left column, both 1-based, the same orientation in
/// which the matrix is printed.
class RankMatrix {
 public:
  RankMatrix() = default;
  explicit RankMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n), 0) {}
  static RankMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int operator()(int p, int q) const { return entries_[index(p, q)]; }
  int& at(int p, int q) { return entries_[index(p, q)]; }
  std::vector<std::vector<int>> rows() const;

  std::string to_string() const;

  bool operator==(const RankMatrix&) const = default;

 private:
  std::size_t index(int p, int q) const {
    return static_cast<std::size_t>((p - 1) * n_ + (q - 1));
  }
  int n_ = 0;
  std::vector<int> entries_;
};

/// r~_{p,q} = #{ k <= q : w(k) >= p }
RankMatrix rank_matrix_tilde(const Permutation& w);

/// Same matrix, computed column by column from the successive minima of
/// {w(1), ..., w(q)}.
RankMatrix rank_matrix_via_minima(const Permutation& w);

/// True iff A <= B entrywise. Throws std::invalid_argument on size mismatch.
bool dominates(const RankMatrix& a, const RankMatrix& b);

}  // namespace klideal
