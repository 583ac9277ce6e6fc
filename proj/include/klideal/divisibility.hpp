#pragma once

#include <optional>

#include "klideal/minors.hpp"
#include "klideal/paths.hpp"
#include "klideal/polynomial.hpp"

namespace klideal {

struct DivisibilityWitness {
  MinorSpec divisor_minor;
  Monomial divisor_term;
  MinorSpec dividend_minor;
  Monomial dividend_term;
};

/// a.vars ⊆ b.vars (as multisets).
bool term_divides(const Monomial& a, const Monomial& b);

/// vars(a) \ vars(b).
Monomial monomial_set_difference(const Monomial& a, const Monomial& b);

/// For monomials with m, X sharing no variable and n, Y sharing no variable
/// and m·X == n·Y, checks m == (n \ X) ⊔ (Y \ X) and n == (m \ Y) ⊔ (X \ Y).
/// Returns false when the preconditions fail.
bool disjoint_product_identity_holds(const Monomial& m, const Monomial& x, const Monomial& n, const Monomial& y);

/// A nonzero path of minor `a` whose variables all occur in `m_b`, found
/// without expanding det(a). `m_b` must be a path monomial of minor `b`
/// (pairwise distinct rows and columns).
///
/// The rows and columns of `a` that m_b does not reach have to be covered by
/// Ones of Z^(v) lying inside `a`: a row of shape (*, ..., *, 1, 0, ..., 0),
/// a column of shape (0, ..., 0, 1, *, ..., *)^t. Beyond that shape test the
/// Ones and the variables of m_b inside `a` form a union of two partial
/// matchings; a path exists exactly when every alternating chain of that
/// union visits an even number of rows and columns in total. When
/// `a` is a subminor of `b` this is the search for a subpath of m_b's path,
/// and the same procedure covers both size orders.
std::optional<Path> dividing_path_structural(const MinorSpec& a, const MinorSpec& b, const Monomial& m_b,
                                             const ZMatrix& z);

bool exists_dividing_term_structural(const MinorSpec& a, const MinorSpec& b, const Monomial& m_b,
                                     const ZMatrix& z);

/// Only the row/column shape test above, on its own.
bool dividing_shape_condition(const MinorSpec& a, const Monomial& m_b, const ZMatrix& z);

}  // namespace klideal
