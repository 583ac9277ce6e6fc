#include "klideal/minors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace klideal {

namespace {

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

bool strictly_increasing_in(const std::vector<int>& xs, int n) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 1 || xs[i] > n) return false;
    if (i > 0 && xs[i - 1] >= xs[i]) return false;
  }
  return true;
}

// Collects minors from a sequence of windows, merging duplicates.
class MinorCollector {
 public:
  void add_window(const Permutation& w, int s, int t) {
    const auto p = required_minor_size(w, s, t);
    if (!p) return;
    const int n = w.size();
    const auto row_sets = colex_subsets(n - s + 1, *p);
    const auto col_sets = colex_subsets(t, *p);
    for (const auto& cols : col_sets) {
      for (const auto& rows : row_sets) {
        auto key = std::make_pair(rows, cols);
        auto it = index_.find(key);
        if (it == index_.end()) {
          index_.emplace(key, minors_.size());
          minors_.push_back({rows, cols, {{s, t}}});
        } else {
          minors_[it->second].source_windows.emplace_back(s, t);
        }
      }
    }
  }

  std::vector<MinorSpec> take() { return std::move(minors_); }

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> index_;
  std::vector<MinorSpec> minors_;
};

}  // namespace

bool MinorSpec::contains(Cell c) const {
  return std::binary_search(rows.begin(), rows.end(), c.row) && std::binary_search(cols.begin(), cols.end(), c.col);
}

bool MinorSpec::is_subminor_of(const MinorSpec& o) const {
  return std::includes(o.rows.begin(), o.rows.end(), rows.begin(), rows.end()) &&
         std::includes(o.cols.begin(), o.cols.end(), cols.begin(), cols.end());
}

std::string MinorSpec::to_string() const { return "rows{" + join(rows) + "} cols{" + join(cols) + "}"; }

void validate_minor(const MinorSpec& m, int n) {
  if (m.rows.empty() || m.rows.size() != m.cols.size())
    throw std::invalid_argument("minor must be square and non-empty: " + m.to_string());
  if (!strictly_increasing_in(m.rows, n) || !strictly_increasing_in(m.cols, n))
    throw std::invalid_argument("minor indices must be strictly increasing within 1.." + std::to_string(n) + ": " +
                                m.to_string());
}

std::string render_minor(const MinorSpec& m, const ZMatrix& z) {
  std::ostringstream out;
  for (auto r = m.rows.rbegin(); r != m.rows.rend(); ++r) {
    for (std::size_t k = 0; k < m.cols.size(); ++k) {
      const ZEntry e = z.entry({*r, m.cols[k]});
      out << (k ? " " : "") << (e.is_one() ? "1" : e.is_zero() ? "0" : to_string(e.cell));
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<int>> colex_subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  if (k == 0) return {{}};
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(c);
    // Colex successor: find the smallest i with c[i] + 1 < c[i+1] (or c[k-1] < m).
    int i = 0;
    while (i < k) {
      const int limit = (i + 1 < k) ? c[static_cast<std::size_t>(i + 1)] : m + 1;
      if (c[static_cast<std::size_t>(i)] + 1 < limit) break;
      ++i;
    }
    if (i == k) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j + 1;
  }
  return out;
}

std::optional<int> required_minor_size(const Permutation& w, int s, int t) {
  const int n = w.size();
  if (s < 1 || s > n || t < 1 || t > n) return std::nullopt;
  int r = 0;
  for (int k = 1; k <= t; ++k)
    if (w(k) >= s) ++r;
  const int p = r + 1;
  if (p <= std::min(n - s + 1, t)) return p;
  return std::nullopt;
}

GeneratorSet enumerate_defining_minors(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("v and w must have the same size");
  const int n = w.size();
  MinorCollector collector;
  for (int t = 1; t <= n; ++t)
    for (int s = 1; s <= n; ++s) collector.add_window(w, s, t);
  return {v, w, collector.take()};
}

std::vector<int> si_sequence(const Permutation& w, int t) {
  const int n = w.size();
  if (t < 1 || t > n) throw std::out_of_range("column index out of range");
  const RankMatrix r = rank_matrix_tilde(w);
  auto col = [&](int p) { return r(p, t); };
  // Top row of the block of equal entries containing row p.
  auto block_top = [&](int p) {
    while (p > 1 && col(p - 1) == col(p)) --p;
    return p;
  };

  std::vector<int> out;
  int current = block_top(n);
  out.push_back(current);
  while (true) {
    // b = lowest row above the current block that repeats the entry above it.
    int b = 0;
    for (int cand = current - 1; cand >= 2; --cand) {
      if (col(cand) > col(current) && col(cand) == col(cand - 1)) {
        b = cand;
        break;
      }
    }
    if (b == 0) break;
    current = block_top(b);
    out.push_back(current);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> relevant_rows_for_column(const Permutation& w, int t) {
  std::vector<int> out;
  for (int s : si_sequence(w, t))
    if (required_minor_size(w, s, t)) out.push_back(s);
  return out;
}

GeneratorSet pruned_defining_minors(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("v and w must have the same size");
  const int n = w.size();
  MinorCollector collector;
  for (int t = 1; t <= n; ++t)
    for (int s : relevant_rows_for_column(w, t)) collector.add_window(w, s, t);
  return {v, w, collector.take()};
}

}  // namespace klideal
