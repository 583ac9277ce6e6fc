#include <random>
#include <stdexcept>

#include "doctest.h"
#include "klideal/divisibility.hpp"
#include "klideal/oracle.hpp"
#include "support.hpp"

using namespace klideal;
using testing::mono;

namespace {

MinorSpec minor(std::vector<int> rows, std::vector<int> cols) { return {std::move(rows), std::move(cols), {}}; }

struct PairCount {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
};

// Every ordered pair of distinct nonsingular pruned generators, every term of the dividend.
void compare_pair(const Permutation& v, const Permutation& w, PairCount& count) {
  const ZMatrix z(v);
  std::vector<MinorSpec> gens;
  for (const MinorSpec& m : pruned_defining_minors(v, w).minors)
    if (!is_singular(m, z)) gens.push_back(m);
  for (const MinorSpec& b : gens) {
    const Polynomial det_b = determinant(b, z);
    for (const MinorSpec& a : gens) {
      if (a.same_indices(b)) continue;
      for (const auto& [m_b, c] : det_b.terms()) {
        (void)c;
        ++count.checked;
        const bool fast = exists_dividing_term_structural(a, b, m_b, z);
        if (fast != oracle::divides_some_term(a, m_b, v)) ++count.mismatches;
        if (const auto path = dividing_path_structural(a, b, m_b, z)) {
          if (!term_divides(path_monomial(*path, z), m_b)) ++count.mismatches;
          if (!determinant(a, z).coeff(path_monomial(*path, z))) ++count.mismatches;
        }
        if (fast && !dividing_shape_condition(a, m_b, z)) ++count.mismatches;
      }
    }
  }
}

}  // namespace

TEST_SUITE("divisibility") {
  TEST_CASE("term division") {
    CHECK(term_divides(mono({{1, 1}}), mono({{1, 1}, {2, 2}})));
    const auto m = mono({{1, 2}, {2, 1}});
    CHECK(term_divides(m, m));
    CHECK(term_divides(Monomial{}, m));
    CHECK_FALSE(term_divides(mono({{1, 1}}), m));
  }

  TEST_CASE("set difference") {
    const auto m = mono({{1, 2}, {2, 1}, {3, 3}});
    CHECK(monomial_set_difference(m, Monomial{}) == m);
    CHECK(monomial_set_difference(m, m).degree() == 0);
    CHECK(monomial_set_difference(m, mono({{2, 1}, {4, 4}})) == mono({{1, 2}, {3, 3}}));
  }

  TEST_CASE("distinct terms of one determinant never divide each other") {
    for (const Permutation& v : all_permutations(4)) {
      const ZMatrix z(v);
      for (const Permutation& w : all_permutations(4))
        for (const MinorSpec& m : pruned_defining_minors(v, w).minors) {
          const auto terms = determinant(m, z).term_list();
          for (std::size_t i = 0; i < terms.size(); ++i)
            for (std::size_t j = 0; j < terms.size(); ++j)
              if (i != j) REQUIRE_FALSE(term_divides(terms[i].mono, terms[j].mono));
        }
    }
  }

  TEST_CASE("disjoint product identity on random path pairs") {
    std::mt19937 rng(11);
    std::size_t tried = 0;
    for (int k = 0; k < 400; ++k) {
      const Permutation v = testing::random_permutation(5, rng);
      const ZMatrix z(v);
      const auto vars = z.variables();
      if (vars.size() < 4) continue;
      // m·X = n·Y with disjoint supports: split one variable set two ways.
      std::vector<Cell> pool = vars;
      std::shuffle(pool.begin(), pool.end(), rng);
      const std::size_t total = std::min<std::size_t>(pool.size(), 6);
      std::uniform_int_distribution<std::size_t> cut(0, total);
      const std::size_t a = cut(rng), b = cut(rng);
      const std::vector<Cell> all(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(total));
      const Monomial m(std::vector<Cell>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(a)));
      const Monomial x(std::vector<Cell>(all.begin() + static_cast<std::ptrdiff_t>(a), all.end()));
      std::vector<Cell> shuffled = all;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const Monomial n(std::vector<Cell>(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(b)));
      const Monomial y(std::vector<Cell>(shuffled.begin() + static_cast<std::ptrdiff_t>(b), shuffled.end()));
      ++tried;
      CHECK(disjoint_product_identity_holds(m, x, n, y));
    }
    CHECK(tried > 100);
    CHECK_FALSE(disjoint_product_identity_holds(mono({{1, 1}}), mono({{1, 1}}), mono({{1, 1}}), mono({{1, 1}})));
    CHECK_FALSE(disjoint_product_identity_holds(mono({{1, 1}}), mono({{2, 2}}), mono({{1, 1}}), mono({{3, 3}})));
  }

  TEST_CASE("subminor containing a full path") {
    // v = 23451: rows{1,3} cols{1,2} of Z_{3,3} has the path z31·z12.
    const Permutation v = Permutation::parse("23451");
    const ZMatrix z(v);
    const MinorSpec a = minor({1, 3}, {1, 2});
    const MinorSpec b = minor({1, 2, 3}, {1, 2, 3});
    const Polynomial det_b = determinant(b, z);
    bool some_true = false;
    for (const auto& [m_b, c] : det_b.terms()) {
      (void)c;
      const bool fast = exists_dividing_term_structural(a, b, m_b, z);
      CHECK(fast == oracle::divides_some_term(a, m_b, v));
      some_true = some_true || fast;
    }
    CHECK(some_true);
  }

  TEST_CASE("disjoint minor lacking the row shape") {
    // Z^(1234): rows{1} cols{1} is z11; m_b = z22 shares nothing with it.
    const Permutation v = Permutation::identity(4);
    const ZMatrix z(v);
    const MinorSpec a = minor({1}, {1});
    const MinorSpec b = minor({2}, {2});
    CHECK_FALSE(dividing_shape_condition(a, mono({{2, 2}}), z));
    CHECK_FALSE(exists_dividing_term_structural(a, b, mono({{2, 2}}), z));
  }

  TEST_CASE("structural decision equals expansion over S_4") {
    PairCount count;
    for (const Permutation& v : all_permutations(4))
      for (const Permutation& w : all_permutations(4)) compare_pair(v, w, count);
    CHECK(count.checked > 0);
    CHECK(count.mismatches == 0);
  }

  TEST_CASE("structural decision equals expansion on 200 random S_5 pairs") {
    std::mt19937 rng(5);
    PairCount count;
    for (int k = 0; k < 200; ++k)
      compare_pair(testing::random_permutation(5, rng), testing::random_permutation(5, rng), count);
    CHECK(count.mismatches == 0);
  }

  TEST_CASE("m_b with a repeated row is rejected") {
    const ZMatrix z(Permutation::identity(3));
    const MinorSpec a = minor({1, 2}, {1, 2});
    CHECK_THROWS_AS(exists_dividing_term_structural(a, a, mono({{1, 1}, {1, 2}}), z), std::invalid_argument);
  }
}
