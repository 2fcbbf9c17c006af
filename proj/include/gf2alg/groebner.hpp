#ifndef GF2ALG_GROEBNER_HPP
#define GF2ALG_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "gf2alg/polynomial.hpp"

namespace gf2alg {

// A generating set with cached leading monomials. `reduced` means: pairwise,
// no term of one generator is divisible by another generator's leading
// monomial, and the generators are sorted ascending by leading monomial.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(std::vector<PolynomialF2> generators, bool reduced = false)
      : generators_(std::move(generators)), reduced_(reduced) {
    if (generators_.empty()) throw DomainError("empty generator list");
    for (std::size_t i = 1; i < generators_.size(); ++i)
      generators_[0].check_context(generators_[i]);
    lms_.reserve(generators_.size());
    for (const auto& g : generators_) {
      if (g.is_zero()) throw DomainError("zero generator in basis");
      lms_.push_back(g.leading_monomial());
    }
  }

  const std::vector<PolynomialF2>& generators() const { return generators_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }
  VariableSet vars() const { return generators_[0].vars(); }
  const MonomialOrder& order() const { return generators_[0].order(); }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return generators_.size(); }

  // Leading monomials sorted ascending, deduplicated, for set comparisons.
  std::vector<Monomial> lm_set() const {
    std::vector<Monomial> s = lms_;
    const MonomialOrder& ord = order();
    std::sort(s.begin(), s.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

 private:
  std::vector<PolynomialF2> generators_;
  std::vector<Monomial> lms_;
  bool reduced_;
};

namespace detail {

// Symmetric difference of an ascending monomial vector with q*f (f stored
// descending), in place.
inline void xor_into_ascending(std::vector<Monomial>& work, const PolynomialF2& f,
                               const Monomial& q, const MonomialOrder& ord) {
  std::vector<Monomial> merged;
  merged.reserve(work.size() + f.term_count());
  auto a = work.begin(), ae = work.end();
  auto b = f.terms().rbegin(), be = f.terms().rend();
  while (a != ae && b != be) {
    Monomial bm = *b * q;
    int c = ord.compare(*a, bm);
    if (c < 0) {
      merged.push_back(*a++);
    } else if (c > 0) {
      merged.push_back(bm);
      ++b;
    } else {
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), a, ae);
  for (; b != be; ++b) merged.push_back(*b * q);
  work = std::move(merged);
}

// Full reduction of p against (gens, lms). Among the generators whose leading
// monomial divides the current term, the one with the smallest leading
// monomial wins (ties by index), which makes reduction traces deterministic.
inline PolynomialF2 reduce_full(const PolynomialF2& p, const std::vector<PolynomialF2>& gens,
                                const std::vector<Monomial>& lms, const MonomialOrder& ord) {
  // `work` ascending so the current lead pops off the back.
  std::vector<Monomial> work(p.terms().rbegin(), p.terms().rend());
  std::vector<Monomial> done;  // irreducible terms, collected descending
  while (!work.empty()) {
    Monomial m = work.back();
    int reducer = -1;
    for (std::size_t i = 0; i < lms.size(); ++i) {
      if (!lms[i].divides(m)) continue;
      if (reducer < 0 || ord.less(lms[i], lms[static_cast<std::size_t>(reducer)]))
        reducer = static_cast<int>(i);
    }
    if (reducer < 0) {
      done.push_back(m);
      work.pop_back();
      continue;
    }
    Monomial q = m / lms[static_cast<std::size_t>(reducer)];
    xor_into_ascending(work, gens[static_cast<std::size_t>(reducer)], q, ord);
  }
  return PolynomialF2::from_terms(p.vars(), ord, std::move(done));
}

}  // namespace detail

// Full normal form: the unique r with p - r in the ideal of F and no term of
// r divisible by any leading monomial of F. Deterministic.
inline PolynomialF2 normal_form(const PolynomialF2& p, const GroebnerBasis& F) {
  F.generators()[0].check_context(p);
  return detail::reduce_full(p, F.generators(), F.leading_monomials(), F.order());
}

// S(f, g) = (lcm/LM(f)) f - (lcm/LM(g)) g; the signs vanish over GF(2).
inline PolynomialF2 s_polynomial(const PolynomialF2& f, const PolynomialF2& g) {
  f.check_context(g);
  if (f.is_zero() || g.is_zero()) throw DomainError("s_polynomial of the zero polynomial");
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_monomial(l / f.leading_monomial()) +
         g.times_monomial(l / g.leading_monomial());
}

// Buchberger criterion: every S-polynomial of a generator pair reduces to
// zero. Pairs with coprime leading monomials are skipped (product criterion).
inline bool is_groebner(const GroebnerBasis& F) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      if (F.leading_monomials()[i].coprime_with(F.leading_monomials()[j])) continue;
      PolynomialF2 s = s_polynomial(F.generators()[i], F.generators()[j]);
      if (!normal_form(s, F).is_zero()) return false;
    }
  }
  return true;
}

// Ideal membership; pre: F is a Groebner basis.
inline bool contains(const GroebnerBasis& F, const PolynomialF2& p) {
  return normal_form(p, F).is_zero();
}

namespace detail {

struct SPair {
  std::uint32_t i, j;
  Monomial lcm;
};

inline GroebnerBasis reduce_basis(std::vector<PolynomialF2> gens, const MonomialOrder& ord) {
  // Minimize: drop generators whose LM is divisible by another kept LM.
  std::sort(gens.begin(), gens.end(), [&](const PolynomialF2& a, const PolynomialF2& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<PolynomialF2> minimal;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (kept.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  // Inter-reduce tails. The leading monomials are pairwise non-dividing and
  // stay fixed, so a single pass leaves every term irreducible against the
  // rest, which characterizes the (unique) reduced basis.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<PolynomialF2> others;
    std::vector<Monomial> other_lms;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      other_lms.push_back(minimal[j].leading_monomial());
    }
    if (others.empty()) break;
    minimal[i] = reduce_full(minimal[i], others, other_lms, ord);
  }
  return GroebnerBasis(std::move(minimal), /*reduced=*/true);
}

}  // namespace detail

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// first) and the product and chain criteria. Zero inputs are dropped, since
// generator families can legitimately contain zero polynomials. Returns the
// reduced basis of the ideal, unique for the given order.
inline GroebnerBasis buchberger(std::vector<PolynomialF2> input, const MonomialOrder& ord) {
  std::vector<PolynomialF2> gens;
  for (auto& p : input) {
    if (p.is_zero()) continue;
    if (p.order() == ord)
      gens.push_back(std::move(p));
    else
      gens.push_back(p.converted_to(p.vars(), ord));
  }
  if (gens.empty()) throw DomainError("buchberger: all generators are zero");

  std::vector<PolynomialF2> basis;
  std::vector<Monomial> lms;
  std::vector<detail::SPair> pending;
  std::set<std::pair<std::uint32_t, std::uint32_t>> pending_keys;

  auto push_generator = [&](PolynomialF2 g) {
    std::uint32_t s = static_cast<std::uint32_t>(basis.size());
    Monomial lm = g.leading_monomial();
    for (std::uint32_t i = 0; i < s; ++i) {
      pending.push_back({i, s, Monomial::lcm(lms[i], lm)});
      pending_keys.insert({i, s});
    }
    basis.push_back(std::move(g));
    lms.push_back(lm);
  };
  for (auto& g : gens) push_generator(std::move(g));

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first.
    std::size_t best = 0;
    for (std::size_t i = 1; i < pending.size(); ++i)
      if (ord.less(pending[i].lcm, pending[best].lcm)) best = i;
    detail::SPair pr = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    pending_keys.erase({pr.i, pr.j});

    if (lms[pr.i].coprime_with(lms[pr.j])) continue;  // product criterion

    // Chain criterion: some third LM divides the lcm and both associated
    // pairs have already been treated.
    bool chained = false;
    for (std::uint32_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j || !lms[k].divides(pr.lcm)) continue;
      auto ik = std::minmax(pr.i, k);
      auto jk = std::minmax(pr.j, k);
      if (!pending_keys.count({ik.first, ik.second}) &&
          !pending_keys.count({jk.first, jk.second}))
        chained = true;
    }
    if (chained) continue;

    PolynomialF2 s = s_polynomial(basis[pr.i], basis[pr.j]);
    PolynomialF2 r = detail::reduce_full(s, basis, lms, ord);
    if (!r.is_zero()) push_generator(std::move(r));
  }

  return detail::reduce_basis(std::move(basis), ord);
}

// True iff the quotient by the ideal of F is finite dimensional: every
// variable needs a pure power among the leading monomials.
inline bool quotient_finite_dimensional(const GroebnerBasis& F) {
  VariableSet vars = F.vars();
  for (int v = kMinVariableIndex; v <= vars.k(); ++v) {
    bool bounded = false;
    for (const auto& lm : F.leading_monomials()) {
      if (lm.exponent(v) > 0 && lm.degree() == static_cast<std::uint32_t>(v) * lm.exponent(v)) {
        bounded = true;
        break;
      }
    }
    if (!bounded) return false;
  }
  return true;
}

namespace detail {

inline void enumerate_standard(const GroebnerBasis& F, int var, const Monomial& acc,
                               std::uint32_t remaining, std::vector<Monomial>& out) {
  if (var > F.vars().k()) {
    if (remaining == 0) {
      for (const auto& lm : F.leading_monomials())
        if (lm.divides(acc)) return;
      out.push_back(acc);
    }
    return;
  }
  std::uint32_t max_e = remaining / static_cast<std::uint32_t>(var);
  for (std::uint32_t e = 0; e <= max_e; ++e)
    enumerate_standard(F, var + 1, acc * Monomial::power(var, e),
                       remaining - e * static_cast<std::uint32_t>(var), out);
}

}  // namespace detail

// All monomials of the given exact weighted degree not divisible by any
// leading monomial of F, ascending under F's order. Pre: F is a Groebner
// basis.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& F, std::uint32_t degree) {
  std::vector<Monomial> out;
  detail::enumerate_standard(F, kMinVariableIndex, Monomial{}, degree, out);
  const MonomialOrder& ord = F.order();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  return out;
}

// Every standard monomial, grouped by ascending degree and ascending under
// F's order within a degree. Pre: the quotient is finite dimensional.
inline std::vector<Monomial> standard_monomials_all(const GroebnerBasis& F) {
  if (!quotient_finite_dimensional(F))
    throw DomainError(
        "quotient is not finite dimensional: some variable has no pure-power "
        "leading-monomial bound");
  VariableSet vars = F.vars();
  std::uint32_t max_degree = 0;
  for (int v = kMinVariableIndex; v <= vars.k(); ++v) {
    std::uint32_t bound = kMaxExponent;
    for (const auto& lm : F.leading_monomials())
      if (lm.exponent(v) > 0 && lm.degree() == static_cast<std::uint32_t>(v) * lm.exponent(v))
        bound = std::min(bound, lm.exponent(v));
    max_degree += static_cast<std::uint32_t>(v) * (bound - 1);
  }
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    auto slice = standard_monomials(F, d);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

}  // namespace gf2alg

#endif
