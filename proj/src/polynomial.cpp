#include "klideal/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klideal {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

}  // namespace

std::string to_string(Cell c) {
  return "z_{" + std::to_string(c.row) + "," + std::to_string(c.col) + "}";
}

Monomial::Monomial(std::vector<Cell> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
}

bool Monomial::is_squarefree() const {
  return std::adjacent_find(vars_.begin(), vars_.end()) == vars_.end();
}

bool Monomial::divides(const Monomial& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

std::string Monomial::to_string() const {
  if (vars_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < vars_.size();) {
    std::size_t j = i;
    while (j < vars_.size() && vars_[j] == vars_[i]) ++j;
    if (i > 0) out << "·";
    out << klideal::to_string(vars_[i]);
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.vars_.reserve(a.vars_.size() + b.vars_.size());
  std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(), std::back_inserter(r.vars_));
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::domain_error(b.to_string() + " does not divide " + a.to_string());
  Monomial r;
  std::set_difference(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                      std::back_inserter(r.vars_));
  return r;
}

Polynomial Polynomial::constant(std::int64_t c) { return monomial(Monomial{}, c); }

Polynomial Polynomial::monomial(const Monomial& m, std::int64_t c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Term> Polynomial::term_list() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({c, m});
  return out;
}

bool Polynomial::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

bool Polynomial::is_homogeneous() const { return degrees().size() <= 1; }

std::vector<int> Polynomial::degrees() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_)
    if (out.empty() || out.back() != m.degree()) out.push_back(m.degree());
  return out;
}

std::int64_t Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << ' ';
    first = false;
    out << (c < 0 ? '-' : '+');
    const std::int64_t mag = c < 0 ? -c : c;
    if (m.is_one()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "·";
      out << m.to_string();
    }
  }
  return out.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, checked_mul(ca, cb));
  return r;
}

Polynomial operator*(std::int64_t c, const Polynomial& a) {
  Polynomial r;
  for (const auto& [m, k] : a.terms_) r.add_term(m, checked_mul(c, k));
  return r;
}

}  // namespace klideal
