#include "klideal/divisibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace klideal {

namespace {

// Bipartite graph on the rows and columns of a minor, edges from two partial
// matchings: the Ones of Z^(v) inside the minor and the variables of m_b
// inside the minor.
class TwoMatchingGraph {
 public:
  TwoMatchingGraph(const MinorSpec& a, const Monomial& m_b, const ZMatrix& z) : p_(a.rows.size()) {
    one_of_row_.assign(p_, -1);
    one_of_col_.assign(p_, -1);
    var_of_row_.assign(p_, -1);
    var_of_col_.assign(p_, -1);
    for (std::size_t k = 0; k < p_; ++k) {
      const int pivot = z.pivot_row_of_col(a.cols[k]);
      auto it = std::lower_bound(a.rows.begin(), a.rows.end(), pivot);
      if (it != a.rows.end() && *it == pivot) {
        const auto r = static_cast<std::size_t>(it - a.rows.begin());
        one_of_row_[r] = static_cast<int>(k);
        one_of_col_[k] = static_cast<int>(r);
      }
    }
    for (const Cell& c : m_b.vars()) {
      auto rit = std::lower_bound(a.rows.begin(), a.rows.end(), c.row);
      auto cit = std::lower_bound(a.cols.begin(), a.cols.end(), c.col);
      if (rit == a.rows.end() || *rit != c.row || cit == a.cols.end() || *cit != c.col) continue;
      const auto r = static_cast<std::size_t>(rit - a.rows.begin());
      const auto k = static_cast<std::size_t>(cit - a.cols.begin());
      if (var_of_row_[r] != -1 || var_of_col_[k] != -1)
        throw std::invalid_argument("dividend monomial repeats a row or column: " + m_b.to_string());
      if (!z.entry(c).is_variable()) throw std::invalid_argument(to_string(c) + " is not a variable");
      var_of_row_[r] = static_cast<int>(k);
      var_of_col_[k] = static_cast<int>(r);
    }
  }

  bool shape_ok() const {
    for (std::size_t i = 0; i < p_; ++i) {
      if (one_of_row_[i] == -1 && var_of_row_[i] == -1) return false;
      if (one_of_col_[i] == -1 && var_of_col_[i] == -1) return false;
    }
    return true;
  }

  // Row chosen for each column, or nullopt when no perfect matching exists.
  std::optional<std::vector<int>> perfect_matching() const {
    std::vector<int> row_of_col(p_, -1);
    std::vector<bool> row_seen(p_, false), col_seen(p_, false);

    auto degree_row = [&](std::size_t r) { return (one_of_row_[r] != -1) + (var_of_row_[r] != -1); };
    auto degree_col = [&](std::size_t k) { return (one_of_col_[k] != -1) + (var_of_col_[k] != -1); };

    // Chains first, walked from an endpoint.
    struct Vertex {
      bool is_row;
      std::size_t idx;
    };
    auto walk_chain = [&](Vertex start) -> bool {
      std::vector<Vertex> seq{start};
      bool via_one;
      if (start.is_row)
        via_one = one_of_row_[start.idx] != -1;
      else
        via_one = one_of_col_[start.idx] != -1;
      Vertex cur = start;
      while (true) {
        (cur.is_row ? row_seen : col_seen)[cur.idx] = true;
        int next;
        if (cur.is_row)
          next = via_one ? one_of_row_[cur.idx] : var_of_row_[cur.idx];
        else
          next = via_one ? one_of_col_[cur.idx] : var_of_col_[cur.idx];
        if (next == -1) break;
        cur = {!cur.is_row, static_cast<std::size_t>(next)};
        seq.push_back(cur);
        via_one = !via_one;
      }
      if (seq.size() % 2 != 0) return false;
      for (std::size_t i = 0; i + 1 < seq.size(); i += 2) {
        const Vertex& x = seq[i];
        const Vertex& y = seq[i + 1];
        if (x.is_row)
          row_of_col[y.idx] = static_cast<int>(x.idx);
        else
          row_of_col[x.idx] = static_cast<int>(y.idx);
      }
      return true;
    };

    for (std::size_t r = 0; r < p_; ++r)
      if (!row_seen[r] && degree_row(r) <= 1 && !walk_chain({true, r})) return std::nullopt;
    for (std::size_t k = 0; k < p_; ++k)
      if (!col_seen[k] && degree_col(k) <= 1 && !walk_chain({false, k})) return std::nullopt;

    // What is left are alternating cycles; the Ones match every vertex on them.
    for (std::size_t r = 0; r < p_; ++r) {
      if (row_seen[r]) continue;
      row_of_col[static_cast<std::size_t>(one_of_row_[r])] = static_cast<int>(r);
    }
    return row_of_col;
  }

 private:
  std::size_t p_;
  std::vector<int> one_of_row_, one_of_col_, var_of_row_, var_of_col_;
};

}  // namespace

bool term_divides(const Monomial& a, const Monomial& b) { return a.divides(b); }

Monomial monomial_set_difference(const Monomial& a, const Monomial& b) {
  std::vector<Cell> out;
  std::set_difference(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(), std::back_inserter(out));
  return Monomial(std::move(out));
}

bool disjoint_product_identity_holds(const Monomial& m, const Monomial& x, const Monomial& n, const Monomial& y) {
  auto disjoint = [](const Monomial& a, const Monomial& b) {
    return monomial_set_difference(a, b) == a;
  };
  if (!disjoint(m, x) || !disjoint(n, y) || !(m * x == n * y)) return false;
  const Monomial m_rebuilt = monomial_set_difference(n, x) * monomial_set_difference(y, x);
  const Monomial n_rebuilt = monomial_set_difference(m, y) * monomial_set_difference(x, y);
  return m_rebuilt == m && n_rebuilt == n;
}

std::optional<Path> dividing_path_structural(const MinorSpec& a, const MinorSpec& b, const Monomial& m_b,
                                             const ZMatrix& z) {
  validate_minor(a, z.size());
  validate_minor(b, z.size());
  const TwoMatchingGraph graph(a, m_b, z);
  if (!graph.shape_ok()) return std::nullopt;
  const auto matching = graph.perfect_matching();
  if (!matching) return std::nullopt;
  Path path;
  for (std::size_t k = 0; k < a.cols.size(); ++k)
    path.picks.push_back({a.rows[static_cast<std::size_t>((*matching)[k])], a.cols[k]});
  return path;
}

bool exists_dividing_term_structural(const MinorSpec& a, const MinorSpec& b, const Monomial& m_b,
                                     const ZMatrix& z) {
  return dividing_path_structural(a, b, m_b, z).has_value();
}

bool dividing_shape_condition(const MinorSpec& a, const Monomial& m_b, const ZMatrix& z) {
  validate_minor(a, z.size());
  return TwoMatchingGraph(a, m_b, z).shape_ok();
}

}  // namespace klideal
