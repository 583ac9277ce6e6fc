#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "klideal/minors.hpp"
#include "klideal/oracle.hpp"
#include "support.hpp"

using namespace klideal;

namespace {

std::vector<std::pair<std::vector<int>, std::vector<int>>> index_sets(const std::vector<MinorSpec>& ms) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const MinorSpec& m : ms) out.emplace_back(m.rows, m.cols);
  return out;
}

MinorSpec drop_row_col(const MinorSpec& m, int row, int col) {
  MinorSpec out;
  for (int r : m.rows)
    if (r != row) out.rows.push_back(r);
  for (int c : m.cols)
    if (c != col) out.cols.push_back(c);
  return out;
}

// Cofactor expansion of m along `row`, each cofactor reduced further. The
// result is a combination of kept minors; `ok` goes false if some window on
// the way is neither kept nor implied by a neighbour.
struct Reducer {
  const Permutation& v;
  const Permutation& w;
  const ZMatrix& z;
  std::set<std::pair<std::vector<int>, std::vector<int>>> kept;
  bool ok = true;

  int rank(int s, int t) const { return rank_matrix_tilde(w)(s, t); }

  Polynomial expand_along(const MinorSpec& m, int row, int s_below, int t) {
    const std::size_t p = m.rows.size();
    const auto pos = static_cast<std::size_t>(std::find(m.rows.begin(), m.rows.end(), row) - m.rows.begin());
    const std::size_t printed = p - 1 - pos;
    Polynomial out;
    for (std::size_t k = 0; k < p; ++k) {
      const Polynomial a = oracle::entry(v, {row, m.cols[k]});
      if (a.is_zero()) continue;
      const int sign = (printed + k) % 2 == 0 ? 1 : -1;
      out += static_cast<std::int64_t>(sign) * (a * reduce(drop_row_col(m, row, m.cols[k]), s_below, t));
    }
    return out;
  }

  // m is a defining minor of window (s, t).
  Polynomial reduce(const MinorSpec& m, int s, int t) {
    if (!ok) return {};
    if (kept.count({m.rows, m.cols})) return oracle::laplace_determinant(m, z);
    const int n = w.size();
    if (s > 1 && rank(s - 1, t) == rank(s, t)) return reduce(m, s - 1, t);
    if (s < n && rank(s + 1, t) + 1 == rank(s, t)) {
      const int top = n - s + 1;
      const int row = std::binary_search(m.rows.begin(), m.rows.end(), top) ? top : m.rows.back();
      return expand_along(m, row, s + 1, t);
    }
    ok = false;
    return {};
  }
};

}  // namespace

TEST_SUITE("minors") {
  TEST_CASE("required minor size") {
    const Permutation w = Permutation::parse("4213");
    CHECK(required_minor_size(w, 3, 2) == 2);
    CHECK(required_minor_size(w, 2, 3) == 3);
    CHECK(required_minor_size(w, 1, 4) == std::nullopt);
    CHECK(required_minor_size(w, 0, 1) == std::nullopt);
    CHECK(required_minor_size(w, 1, 5) == std::nullopt);
  }

  TEST_CASE("colex subsets") {
    using V = std::vector<std::vector<int>>;
    CHECK(colex_subsets(4, 2) == V{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(colex_subsets(3, 0) == V{{}});
    CHECK(colex_subsets(2, 3).empty());
  }

  TEST_CASE("v = 2314, w = 4213 defining and pruned minors") {
    const Permutation v = Permutation::parse("2314");
    const Permutation w = Permutation::parse("4213");
    using Sets = std::vector<std::pair<std::vector<int>, std::vector<int>>>;
    const GeneratorSet all = enumerate_defining_minors(v, w);
    CHECK(index_sets(all.minors) == Sets{{{1, 2}, {1, 2}}, {{1, 2, 3}, {1, 2, 3}}, {{1, 2}, {1, 3}}, {{1, 2}, {2, 3}}});
    const GeneratorSet pruned = pruned_defining_minors(v, w);
    CHECK(index_sets(pruned.minors) == Sets{{{1, 2}, {1, 2}}, {{1, 2}, {1, 3}}, {{1, 2}, {2, 3}}});
    CHECK(pruned.minors[0].source_windows == std::vector<std::pair<int, int>>{{3, 2}, {3, 3}});

    const ZMatrix z(v);
    CHECK(render_minor(all.minors[3], z) == "1 0\nz_{1,2} z_{1,3}\n");
  }

  TEST_CASE("w0 has no defining minors") {
    for (int n = 1; n <= 5; ++n) {
      const Permutation w0 = Permutation::longest(n);
      CHECK(enumerate_defining_minors(Permutation::identity(n), w0).minors.empty());
      CHECK(pruned_defining_minors(Permutation::identity(n), w0).minors.empty());
    }
  }

  TEST_CASE("window walk for w = 42531, t = 3") {
    const Permutation w = Permutation::parse("42531");
    CHECK(si_sequence(w, 3) == std::vector<int>{1, 3, 5});
    CHECK(relevant_rows_for_column(w, 3) == std::vector<int>{3});
    CHECK(oracle::si(w, 3) == std::vector<int>{3});
  }

  TEST_CASE("window walk equals pairwise dominance over S_4 and S_5") {
    for (int n = 1; n <= 5; ++n)
      for (const Permutation& w : all_permutations(n))
        for (int t = 1; t <= n; ++t) REQUIRE(relevant_rows_for_column(w, t) == oracle::si(w, t));
  }

  TEST_CASE("enumeration equals the bitmask oracle over S_4") {
    const Permutation v = Permutation::identity(4);
    for (const Permutation& w : all_permutations(4)) {
      auto fast = index_sets(enumerate_defining_minors(v, w).minors);
      auto slow = index_sets(oracle::defining_minors(v, w));
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      REQUIRE(fast == slow);
    }
  }

  TEST_CASE("v = 23451, w = 42531 relevant windows") {
    const GeneratorSet g = pruned_defining_minors(Permutation::parse("23451"), Permutation::parse("42531"));
    std::set<std::pair<int, int>> windows;
    for (const MinorSpec& m : g.minors) windows.insert(m.source_windows.begin(), m.source_windows.end());
    CHECK(windows == std::set<std::pair<int, int>>{{5, 1}, {3, 2}, {5, 2}, {3, 3}});
    CHECK(g.minors.size() == 6);
    CHECK(enumerate_defining_minors(g.v, g.w).minors.size() == 6);
  }

  TEST_CASE("every discarded determinant is a combination of kept ones") {
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (const Permutation& v : all_permutations(3))
      for (const Permutation& w : all_permutations(3)) pairs.emplace_back(v, w);
    std::mt19937 rng(20261014);
    for (int k = 0; k < 50; ++k) pairs.emplace_back(testing::random_permutation(4, rng), testing::random_permutation(4, rng));

    for (const auto& [v, w] : pairs) {
      const ZMatrix z(v);
      Reducer red{v, w, z, {}};
      for (const MinorSpec& m : pruned_defining_minors(v, w).minors) red.kept.insert({m.rows, m.cols});
      for (const MinorSpec& m : enumerate_defining_minors(v, w).minors) {
        const auto [s, t] = m.source_windows.front();
        const Polynomial combo = red.reduce(m, s, t);
        INFO(v.to_string(), " ", w.to_string(), " ", m.to_string());
        REQUIRE(red.ok);
        CHECK(combo == oracle::laplace_determinant(m, z));
      }
    }
  }

  TEST_CASE("malformed minors") {
    CHECK_THROWS_AS(validate_minor({{1, 2}, {1}, {}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_minor({{2, 1}, {1, 2}, {}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_minor({{1, 4}, {1, 2}, {}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_minor({{}, {}, {}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_defining_minors(Permutation::identity(3), Permutation::identity(4)),
                    std::invalid_argument);
  }
}
