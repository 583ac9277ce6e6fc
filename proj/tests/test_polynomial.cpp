#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "klideal/polynomial.hpp"
#include "support.hpp"

using namespace klideal;
using testing::mono;
using testing::poly;

TEST_SUITE("polynomial") {
  TEST_CASE("monomials") {
    const Monomial a = mono({{1, 1}, {2, 2}});
    CHECK(a.degree() == 2);
    CHECK(a.to_string() == "z_{1,1}·z_{2,2}");
    CHECK(mono({{2, 2}, {1, 1}}) == a);
    CHECK(mono({{1, 1}}).divides(a));
    CHECK(Monomial{}.divides(a));
    CHECK_FALSE(a.divides(mono({{1, 1}})));
    CHECK(a / mono({{2, 2}}) == mono({{1, 1}}));
    CHECK_THROWS_AS(a / mono({{3, 3}}), std::domain_error);
    CHECK((a * a).to_string() == "z_{1,1}^2·z_{2,2}^2");
    CHECK_FALSE((a * a).is_squarefree());
    CHECK(Monomial{}.to_string() == "1");
  }

  TEST_CASE("canonical order and printing") {
    const Polynomial p = poly({{1, {{1, 3}, {2, 1}}}, {-1, {{1, 1}}}, {2, {}}});
    CHECK(p.to_string() == "+2 -z_{1,1} +z_{1,3}·z_{2,1}");
    CHECK(p.degrees() == std::vector<int>{0, 1, 2});
    CHECK_FALSE(p.is_homogeneous());
    CHECK(Polynomial{}.to_string() == "0");
    CHECK(Polynomial::constant(-1).is_unit());
    CHECK_FALSE(Polynomial::constant(2).is_unit());
  }

  TEST_CASE("arithmetic") {
    const Polynomial x = Polynomial::variable({1, 1});
    const Polynomial y = Polynomial::variable({1, 2});
    const Polynomial s = x + y;
    CHECK((s * s).to_string() == "+z_{1,1}^2 +2·z_{1,1}·z_{1,2} +z_{1,2}^2");
    CHECK((s - x) == y);
    CHECK((x - x).is_zero());
    CHECK((-x).coeff(mono({{1, 1}})) == -1);
    CHECK((3 * x).coeff(mono({{1, 1}})) == 3);
  }

  TEST_CASE("overflow is detected") {
    const Polynomial big = Polynomial::constant(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Polynomial::constant(1), std::overflow_error);
    CHECK_THROWS_AS(big * Polynomial::constant(2), std::overflow_error);
  }
}
