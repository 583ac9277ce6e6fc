#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace klideal {

/// Position z_{row,col} in Z^(v): `row` counted from the BOTTOM, `col` from
/// the left, both 1-based. Cells double as the indeterminates of every
/// polynomial in this library.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

std::string to_string(Cell c);

/// A monic monomial stored as a sorted multiset of cells. Products coming
/// from paths never repeat a cell, but general products (multiplier times
/// generator) may, so repetition means a higher power.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Cell> vars);

  const std::vector<Cell>& vars() const { return vars_; }
  int degree() const { return static_cast<int>(vars_.size()); }
  bool is_one() const { return vars_.empty(); }
  bool is_squarefree() const;

  /// Multiset inclusion: this | other.
  bool divides(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; throws std::domain_error unless b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

 private:
  std::vector<Cell> vars_;
};

/// Canonical term order: degree first, then lexicographic on the sorted cells.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.vars() < b.vars();
  }
};

struct Term {
  std::int64_t coeff = 0;
  Monomial mono;
};

/// Sparse polynomial with integer coefficients in the cell indeterminates.
/// No zero coefficient is ever stored; iteration follows CanonicalOrder.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, std::int64_t, CanonicalOrder>;

  Polynomial() = default;
  static Polynomial constant(std::int64_t c);
  static Polynomial monomial(const Monomial& m, std::int64_t c = 1);
  static Polynomial variable(Cell c) { return monomial(Monomial({c})); }

  void add_term(const Monomial& m, std::int64_t c);

  const TermMap& terms() const { return terms_; }
  std::vector<Term> term_list() const;
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// ±1
  bool is_unit() const;
  bool is_homogeneous() const;
  /// Distinct term degrees, ascending.
  std::vector<int> degrees() const;
  std::int64_t coeff(const Monomial& m) const;

  /// Signed monomial list in canonical order, e.g. "+z_{1,3}·z_{2,1} -z_{1,1}·z_{2,3}".
  /// The zero polynomial prints as "0".
  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(std::int64_t c, const Polynomial& a);
  Polynomial operator-() const { return std::int64_t{-1} * *this; }

 private:
  TermMap terms_;
};

}  // namespace klideal
