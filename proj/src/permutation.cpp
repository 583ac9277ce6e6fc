#include "klideal/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klideal {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("permutation must have size >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("word is not a bijection on {1..n}");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view tok = text.substr(pos, next - pos);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("malformed permutation token in '" + std::string(text) + "'");
      w.push_back(std::stoi(std::string(tok)));
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  const bool commas = size() >= 10;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (commas && i > 0) out << ',';
    out << word_[i];
  }
  return out.str();
}

Permutation inverse(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) inv[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool is_longest_element(const Permutation& w) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    if (w(i) != n - i + 1) return false;
  return true;
}

Permutation complement(const Permutation& p) {
  std::vector<int> word = p.word();
  for (int& x : word) x = p.size() + 1 - x;
  return Permutation(std::move(word));
}

bool avoids_pattern(const Permutation& p, const Permutation& pattern) {
  const auto& pw = pattern.word();
  const bool supported = pw == std::vector<int>{3, 2, 1} || pw == std::vector<int>{1, 3, 2};
  if (!supported) throw std::invalid_argument("unsupported pattern " + pattern.to_string());

  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const int a = p(i), b = p(j), c = p(k);
        // 321: a > b > c.   132: a < c < b.
        if (pw[0] == 3 ? (a > b && b > c) : (a < c && c < b)) return false;
      }
  return true;
}

RankMatrix RankMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  RankMatrix m(static_cast<int>(rows.size()));
  for (int p = 1; p <= m.n_; ++p) {
    const auto& row = rows[static_cast<std::size_t>(p - 1)];
    if (static_cast<int>(row.size()) != m.n_) throw std::invalid_argument("rank matrix must be square");
    for (int q = 1; q <= m.n_; ++q) m.at(p, q) = row[static_cast<std::size_t>(q - 1)];
  }
  return m;
}

std::vector<std::vector<int>> RankMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int p = 1; p <= n_; ++p)
    for (int q = 1; q <= n_; ++q) out[static_cast<std::size_t>(p - 1)].push_back((*this)(p, q));
  return out;
}

std::string RankMatrix::to_string() const {
  std::ostringstream out;
  for (int p = 1; p <= n_; ++p) {
    for (int q = 1; q <= n_; ++q) out << (q > 1 ? " " : "") << (*this)(p, q);
    out << '\n';
  }
  return out.str();
}

RankMatrix rank_matrix_tilde(const Permutation& w) {
  const int n = w.size();
  RankMatrix r(n);
  for (int p = 1; p <= n; ++p) {
    int count = 0;
    for (int q = 1; q <= n; ++q) {
      if (w(q) >= p) ++count;
      r.at(p, q) = count;
    }
  }
  return r;
}

RankMatrix rank_matrix_via_minima(const Permutation& w) {
  const int n = w.size();
  RankMatrix r(n);
  for (int q = 1; q <= n; ++q) {
    // a[i] = a_i^{(q)}: a_q is the smallest of w(1..q), a_1 the largest.
    std::vector<int> sorted(w.word().begin(), w.word().begin() + q);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> a(static_cast<std::size_t>(q) + 1, 0);
    for (int i = 1; i <= q; ++i) a[static_cast<std::size_t>(i)] = sorted[static_cast<std::size_t>(q - i)];

    for (int p = 1; p <= n; ++p) {
      int value = 0;
      if (p <= a[static_cast<std::size_t>(q)]) {
        value = q;
      } else if (p > a[1]) {
        value = 0;
      } else {
        for (int i = 2; i <= q; ++i) {
          if (a[static_cast<std::size_t>(i)] < p && p <= a[static_cast<std::size_t>(i - 1)]) {
            value = i - 1;
            break;
          }
        }
      }
      r.at(p, q) = value;
    }
  }
  return r;
}

bool dominates(const RankMatrix& a, const RankMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rank matrices differ in size");
  for (int p = 1; p <= a.size(); ++p)
    for (int q = 1; q <= a.size(); ++q)
      if (a(p, q) > b(p, q)) return false;
  return true;
}

}  // namespace klideal
