#include <stdexcept>

#include "doctest.h"
#include "klideal/oracle.hpp"
#include "support.hpp"

using namespace klideal;
using testing::poly;

TEST_SUITE("oracle") {
  TEST_CASE("laplace expansion") {
    const Permutation v = Permutation::identity(3);
    const ZMatrix z(v);
    CHECK(oracle::laplace_determinant({{1}, {1}, {}}, z) == Polynomial::variable({1, 1}));
    // Printed [z21 1; z11 z12]
    CHECK(oracle::laplace_determinant({{1, 2}, {1, 2}, {}}, z) == poly({{1, {{2, 1}, {1, 2}}}, {-1, {{1, 1}}}}));
    CHECK(oracle::entry(v, {3, 1}) == Polynomial::constant(1));
    CHECK(oracle::entry(v, {3, 2}).is_zero());
  }

  TEST_CASE("size guards") {
    const Permutation v = Permutation::identity(9);
    const ZMatrix z(v);
    std::vector<int> all{1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK_THROWS_AS(oracle::laplace_determinant({all, all, {}}, z), std::length_error);
    CHECK_THROWS_AS(oracle::si(Permutation::identity(7), 1), std::length_error);
    CHECK_THROWS_AS(oracle::verify(5), std::length_error);
  }

  TEST_CASE("pairwise dominance windows") {
    CHECK(oracle::si(Permutation::parse("42531"), 3) == std::vector<int>{3});
    for (int t = 1; t <= 4; ++t) CHECK(oracle::si(Permutation::longest(4), t).empty());
  }

  TEST_CASE("degree tables") {
    const auto table = oracle::homogeneity_table(Permutation::parse("2314"), Permutation::parse("4213"));
    REQUIRE(table.size() == 3);
    CHECK(table[0].degrees == std::set<int>{1, 2});
    CHECK(table[1].degrees == std::set<int>{2});
    CHECK(table[2].degrees == std::set<int>{1});
    CHECK(oracle::homogeneity_table(Permutation::identity(4), Permutation::longest(4)).empty());
    for (const auto& row : oracle::homogeneity_table(Permutation::parse("321"), Permutation::parse("123")))
      CHECK(row.degrees.size() <= 1);
  }

  TEST_CASE("report bookkeeping") {
    oracle::OracleReport a, b;
    a.check("x", true, "i", "1", "1");
    b.check("x", false, "j", "1", "0");
    a.merge(b);
    CHECK(a.checked == 2);
    CHECK(a.checked_by_operation.at("x") == 2);
    CHECK(a.mismatches_for("x") == 1);
    CHECK_FALSE(a.pass());
  }

  TEST_CASE("full cross-check for n = 3") {
    const oracle::OracleReport rep = oracle::verify(3);
    CHECK(rep.checked > 0);
    CHECK(rep.pass());
  }
}
