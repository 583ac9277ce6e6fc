#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "klideal/permutation.hpp"
#include "klideal/polynomial.hpp"

namespace testing {

using CellList = std::vector<std::pair<int, int>>;

inline klideal::Monomial mono(const CellList& cells) {
  std::vector<klideal::Cell> out;
  for (auto [r, c] : cells) out.push_back({r, c});
  return klideal::Monomial(out);
}

inline klideal::Polynomial poly(const std::vector<std::pair<std::int64_t, CellList>>& terms) {
  klideal::Polynomial p;
  for (const auto& [c, cells] : terms) p.add_term(mono(cells), c);
  return p;
}

// x_k of the abstract examples, modelled as the cell (1, k).
inline klideal::Polynomial x(const std::vector<int>& ks, std::int64_t c = 1) {
  CellList cells;
  for (int k : ks) cells.emplace_back(1, k);
  return poly({{c, cells}});
}

inline klideal::Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(word.begin(), word.end(), rng);
  return klideal::Permutation(word);
}

}  // namespace testing
