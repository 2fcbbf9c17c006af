#ifndef GF2ALG_POLYNOMIAL_HPP
#define GF2ALG_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "gf2alg/monomial.hpp"

namespace gf2alg {

// C(m, j) mod 2 by Kummer: the binomial is odd iff adding j and m-j carries
// nowhere in binary.
inline int binom_parity(std::uint64_t m, std::uint64_t j) {
  if (j > m) throw DomainError("binom_parity requires 0 <= j <= m");
  return (j & (m - j)) == 0 ? 1 : 0;
}

// Multivariate polynomial over GF(2): a finite set of monomials. Terms are
// kept strictly descending under the carried order, so the leading monomial
// is terms().front() and addition is a linear merge.
class PolynomialF2 {
 public:
  PolynomialF2(VariableSet vars, MonomialOrder order)
      : vars_(vars), order_(std::move(order)) {
    if (!order_.covers(vars_))
      throw DomainError("monomial order does not cover the variable set");
  }

  static PolynomialF2 zero(VariableSet vars, const MonomialOrder& order) {
    return PolynomialF2(vars, order);
  }

  static PolynomialF2 one(VariableSet vars, const MonomialOrder& order) {
    PolynomialF2 p(vars, order);
    p.terms_.push_back(Monomial{});
    return p;
  }

  static PolynomialF2 monomial(VariableSet vars, const MonomialOrder& order, const Monomial& m) {
    PolynomialF2 p(vars, order);
    p.check_monomial(m);
    p.terms_.push_back(m);
    return p;
  }

  static PolynomialF2 from_terms(VariableSet vars, const MonomialOrder& order,
                                 std::vector<Monomial> terms) {
    PolynomialF2 p(vars, order);
    for (const auto& m : terms) p.check_monomial(m);
    std::sort(terms.begin(), terms.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    p.terms_ = cancel_adjacent(std::move(terms));
    return p;
  }

  VariableSet vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_one() const { return terms_.size() == 1 && terms_[0].is_unit(); }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
    return terms_.front();
  }

  // Weighted degree of the polynomial, i.e. the maximum over its terms.
  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& m : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool homogeneous() const {
    for (const auto& m : terms_)
      if (m.degree() != terms_.front().degree()) return false;
    return true;
  }

  bool contains_term(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [&](const Monomial& a, const Monomial& b) {
                                 return order_.greater(a, b);
                               });
    return it != terms_.end() && *it == m;
  }

  PolynomialF2 operator+(const PolynomialF2& q) const {
    check_context(q);
    PolynomialF2 r(vars_, order_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = q.terms_.begin(), be = q.terms_.end();
    while (a != ae && b != be) {
      int c = order_.compare(*a, *b);
      if (c > 0) {
        r.terms_.push_back(*a++);
      } else if (c < 0) {
        r.terms_.push_back(*b++);
      } else {
        ++a;  // equal monomials cancel over GF(2)
        ++b;
      }
    }
    r.terms_.insert(r.terms_.end(), a, ae);
    r.terms_.insert(r.terms_.end(), b, be);
    return r;
  }

  PolynomialF2& operator+=(const PolynomialF2& q) {
    *this = *this + q;
    return *this;
  }

  // Multiplication by a monomial preserves term order (the order is
  // multiplicative), so this is a plain map.
  PolynomialF2 times_monomial(const Monomial& m) const {
    PolynomialF2 r(vars_, order_);
    check_monomial(m);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(t * m);
    return r;
  }

  PolynomialF2 operator*(const PolynomialF2& q) const {
    check_context(q);
    if (is_zero() || q.is_zero()) return PolynomialF2(vars_, order_);
    const PolynomialF2& small = terms_.size() <= q.terms_.size() ? *this : q;
    const PolynomialF2& big = terms_.size() <= q.terms_.size() ? q : *this;
    std::vector<Monomial> acc;
    acc.reserve(small.terms_.size() * big.terms_.size());
    for (const auto& m : small.terms_)
      for (const auto& t : big.terms_) acc.push_back(m * t);
    std::sort(acc.begin(), acc.end(),
              [&](const Monomial& a, const Monomial& b) { return order_.greater(a, b); });
    PolynomialF2 r(vars_, order_);
    r.terms_ = cancel_adjacent(std::move(acc));
    return r;
  }

  // Frobenius: squaring is term-wise over GF(2).
  PolynomialF2 square() const {
    PolynomialF2 r(vars_, order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(t.pow(2));
    return r;
  }

  // p^(2^s), term-wise.
  PolynomialF2 frobenius_pow(int s) const {
    PolynomialF2 r(vars_, order_);
    r.terms_.reserve(terms_.size());
    std::uint32_t e = std::uint32_t{1} << s;
    for (const auto& t : terms_) r.terms_.push_back(t.pow(e));
    return r;
  }

  PolynomialF2 pow(std::uint32_t e) const {
    PolynomialF2 r = one(vars_, order_);
    PolynomialF2 base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base.square();
    }
    return r;
  }

  // Image under w_var -> 0: drops every term containing the variable.
  PolynomialF2 substitute_zero(int var) const {
    PolynomialF2 r(vars_, order_);
    for (const auto& t : terms_)
      if (t.exponent(var) == 0) r.terms_.push_back(t);
    return r;
  }

  // Exact division by a single variable; every term must contain it.
  // Returns false if some term lacks the variable (quotient untouched).
  bool divide_by_variable(int var, PolynomialF2& quotient) const {
    std::vector<Monomial> q;
    q.reserve(terms_.size());
    Monomial v = Monomial::variable(var);
    for (const auto& t : terms_) {
      if (t.exponent(var) == 0) return false;
      q.push_back(t / v);
    }
    quotient = PolynomialF2(vars_, order_);
    quotient.terms_ = std::move(q);  // division by a fixed monomial preserves order
    return true;
  }

  // Reinterprets the polynomial in a wider or equal variable set / different
  // order; fails if a used variable is missing from the target set.
  PolynomialF2 converted_to(VariableSet vars, const MonomialOrder& order) const {
    PolynomialF2 r(vars, order);
    std::vector<Monomial> ts = terms_;
    for (const auto& t : ts) r.check_monomial(t);
    std::sort(ts.begin(), ts.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    r.terms_ = std::move(ts);
    return r;
  }

  friend bool operator==(const PolynomialF2& a, const PolynomialF2& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolynomialF2& a, const PolynomialF2& b) { return !(a == b); }

  void check_context(const PolynomialF2& q) const {
    if (vars_ != q.vars_) throw DomainError("polynomial variable sets differ");
    if (order_ != q.order_) throw DomainError("polynomial monomial orders differ");
  }

 private:
  void check_monomial(const Monomial& m) const {
    if (m.max_variable() > vars_.k())
      throw DomainError("monomial mentions w" + std::to_string(m.max_variable()) +
                        " outside the variable set (k=" + std::to_string(vars_.k()) + ")");
  }

  static std::vector<Monomial> cancel_adjacent(std::vector<Monomial> sorted) {
    std::vector<Monomial> out;
    out.reserve(sorted.size());
    std::size_t i = 0;
    while (i < sorted.size()) {
      std::size_t j = i + 1;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      if ((j - i) & 1) out.push_back(sorted[i]);
      i = j;
    }
    return out;
  }

  VariableSet vars_;
  MonomialOrder order_;
  std::vector<Monomial> terms_;
};

// Leading monomial of p under an arbitrary order (not necessarily the one the
// polynomial is sorted by).
inline Monomial leading_monomial(const PolynomialF2& p, const MonomialOrder& order) {
  if (p.is_zero()) throw DomainError("leading monomial of the zero polynomial");
  if (order == p.order()) return p.leading_monomial();
  Monomial best = p.terms().front();
  for (const auto& t : p.terms())
    if (order.greater(t, best)) best = t;
  return best;
}

}  // namespace gf2alg

#endif
