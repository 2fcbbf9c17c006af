#ifndef GF2ALG_QUOTIENT_HPP
#define GF2ALG_QUOTIENT_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gf2alg/bitset.hpp"
#include "gf2alg/grassmann.hpp"

namespace gf2alg {

class AlgebraElement;

// The finite-dimensional graded algebra F2[w_2..w_k] / I_{n,k} with its
// standard-monomial basis (ordered by degree, then by the monomial order) and
// a multiplication table per generator. Cheap to copy: a shared handle to
// immutable data.
class QuotientAlgebra {
 public:
  static QuotientAlgebra build(IdealSpec spec) {
    if (has_known_gb(spec.n, spec.k)) return build(spec, known_gb(spec.n, spec.k));
    return build(spec, buchberger(ideal_generators(spec),
                                  MonomialOrder::family_order(VariableSet(spec.k))));
  }

  static QuotientAlgebra build(IdealSpec spec, GroebnerBasis gb) {
    auto d = std::make_shared<Data>(spec, std::move(gb));
    return QuotientAlgebra(std::move(d));
  }

  const IdealSpec& spec() const { return d_->spec; }
  const GroebnerBasis& gb() const { return d_->gb; }
  VariableSet vars() const { return d_->gb.vars(); }
  const MonomialOrder& order() const { return d_->gb.order(); }

  std::size_t dim() const { return d_->basis.size(); }
  const std::vector<Monomial>& basis() const { return d_->basis; }
  std::uint32_t degree_of(std::uint32_t index) const { return d_->basis[index].degree(); }
  std::uint32_t top_degree() const { return d_->basis.back().degree(); }

  std::optional<std::uint32_t> index_of(const Monomial& m) const {
    const MonomialOrder& ord = order();
    auto it = std::lower_bound(d_->basis.begin(), d_->basis.end(), m,
                               [&](const Monomial& a, const Monomial& b) {
                                 if (a.degree() != b.degree()) return a.degree() < b.degree();
                                 return ord.less(a, b);
                               });
    if (it == d_->basis.end() || !(*it == m)) return std::nullopt;
    return static_cast<std::uint32_t>(it - d_->basis.begin());
  }

  // (degree, dimension) for every degree up to the top one.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> dim_profile() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> profile(top_degree() + 1);
    for (std::uint32_t deg = 0; deg <= top_degree(); ++deg) profile[deg] = {deg, 0};
    for (const auto& m : d_->basis) ++profile[m.degree()].second;
    return profile;
  }

  // Sparse column u of the multiplication-by-w_var matrix: the basis indices
  // of nf(w_var * basis[u]).
  const std::vector<std::uint32_t>& gen_column(int var, std::uint32_t u) const {
    return d_->tables[static_cast<std::size_t>(var - kMinVariableIndex)][u];
  }

  // coords <- (multiplication by w_var) applied to coords.
  void apply_generator(int var, DynBitset& coords) const {
    DynBitset out(dim());
    const auto& table = d_->tables[static_cast<std::size_t>(var - kMinVariableIndex)];
    coords.for_each_set([&](std::size_t u) {
      for (std::uint32_t v : table[u]) out.flip(v);
    });
    coords = std::move(out);
  }

  void apply_monomial(const Monomial& m, DynBitset& coords) const {
    for (int v = kMinVariableIndex; v <= vars().k(); ++v)
      for (std::uint32_t e = 0; e < m.exponent(v); ++e) apply_generator(v, coords);
  }

  AlgebraElement unit() const;
  AlgebraElement zero() const;
  AlgebraElement generator(int var) const;
  // Coset of an arbitrary polynomial (reduced to its normal form).
  AlgebraElement reduce(const PolynomialF2& p) const;
  // Coset of the monomial w_2^{e_2} ... w_k^{e_k}.
  AlgebraElement monomial_coset(const Monomial& m) const;
  PolynomialF2 to_polynomial(const AlgebraElement& a) const;

  // Largest m with (coset of w_var)^m nonzero.
  int height(int var) const;

  struct CupLengthResult {
    int length;
    Monomial witness;  // lexicographically least maximizer by exponent tuple
  };
  // Maximum of b_2 + ... + b_k over monomials w_2^{b_2} ... w_k^{b_k} with a
  // nonzero coset; every product of positive-degree elements expands into
  // such monomials, so this is the cup-length of the algebra.
  CupLengthResult cup_length() const;

  friend bool operator==(const QuotientAlgebra& a, const QuotientAlgebra& b) {
    return a.d_ == b.d_;
  }
  friend bool operator!=(const QuotientAlgebra& a, const QuotientAlgebra& b) {
    return !(a == b);
  }

 private:
  struct Data {
    IdealSpec spec;
    GroebnerBasis gb;
    std::vector<Monomial> basis;
    std::vector<std::vector<std::vector<std::uint32_t>>> tables;  // [var][u] -> indices

    Data(IdealSpec s, GroebnerBasis basis_in) : spec(s), gb(std::move(basis_in)) {
      if (gb.vars().k() != spec.k)
        throw DomainError("basis variable count does not match the ideal spec");
      basis = standard_monomials_all(gb);  // throws if infinite dimensional
      if (basis.empty() || !basis.front().is_unit())
        throw DomainError("quotient has no unit: the ideal is the whole ring");
      build_tables();
    }

    void build_tables() {
      const MonomialOrder& ord = gb.order();
      tables.assign(static_cast<std::size_t>(gb.vars().k() - 1), {});
      for (int v = kMinVariableIndex; v <= gb.vars().k(); ++v) {
        auto& table = tables[static_cast<std::size_t>(v - kMinVariableIndex)];
        table.resize(basis.size());
        for (std::uint32_t u = 0; u < basis.size(); ++u) {
          Monomial m = basis[u] * Monomial::variable(v);
          PolynomialF2 nf = normal_form(PolynomialF2::monomial(gb.vars(), ord, m), gb);
          std::vector<std::uint32_t> col;
          col.reserve(nf.term_count());
          for (const auto& t : nf.terms()) col.push_back(index_of_exact(t));
          std::sort(col.begin(), col.end());
          table[u] = std::move(col);
        }
      }
    }

    std::uint32_t index_of_exact(const Monomial& m) const {
      const MonomialOrder& ord = gb.order();
      auto it = std::lower_bound(basis.begin(), basis.end(), m,
                                 [&](const Monomial& a, const Monomial& b) {
                                   if (a.degree() != b.degree()) return a.degree() < b.degree();
                                   return ord.less(a, b);
                                 });
      if (it == basis.end() || !(*it == m))
        throw DomainError("normal form produced a non-standard monomial");
      return static_cast<std::uint32_t>(it - basis.begin());
    }
  };

  explicit QuotientAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

// A GF(2) linear combination of basis cosets of one quotient algebra.
class AlgebraElement {
 public:
  AlgebraElement(QuotientAlgebra alg, DynBitset coords)
      : alg_(std::move(alg)), coords_(std::move(coords)) {}

  const QuotientAlgebra& algebra() const { return alg_; }
  const DynBitset& coords() const { return coords_; }
  DynBitset& coords() { return coords_; }

  bool is_zero() const { return coords_.none(); }

  // Common degree of the support, or nullopt when mixed or zero.
  std::optional<std::uint32_t> degree() const {
    std::optional<std::uint32_t> deg;
    bool mixed = false;
    coords_.for_each_set([&](std::size_t u) {
      std::uint32_t d = alg_.degree_of(static_cast<std::uint32_t>(u));
      if (!deg)
        deg = d;
      else if (*deg != d)
        mixed = true;
    });
    if (mixed) return std::nullopt;
    return deg;
  }

  AlgebraElement operator+(const AlgebraElement& o) const {
    check_same(o);
    DynBitset c = coords_;
    c ^= o.coords_;
    return AlgebraElement(alg_, std::move(c));
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.alg_ == b.alg_ && a.coords_ == b.coords_;
  }

  void check_same(const AlgebraElement& o) const {
    if (!(alg_ == o.alg_)) throw DomainError("elements belong to different algebras");
  }

 private:
  QuotientAlgebra alg_;
  DynBitset coords_;
};

inline AlgebraElement QuotientAlgebra::zero() const {
  return AlgebraElement(*this, DynBitset(dim()));
}

inline AlgebraElement QuotientAlgebra::unit() const {
  DynBitset c(dim());
  c.set(0);  // basis[0] is the unit monomial
  return AlgebraElement(*this, std::move(c));
}

inline AlgebraElement QuotientAlgebra::generator(int var) const {
  DynBitset c(dim());
  c.set(0);
  apply_generator(var, c);
  return AlgebraElement(*this, std::move(c));
}

inline AlgebraElement QuotientAlgebra::monomial_coset(const Monomial& m) const {
  DynBitset c(dim());
  c.set(0);
  apply_monomial(m, c);
  return AlgebraElement(*this, std::move(c));
}

inline AlgebraElement QuotientAlgebra::reduce(const PolynomialF2& p) const {
  PolynomialF2 nf = normal_form(p, gb());
  DynBitset c(dim());
  for (const auto& t : nf.terms()) {
    auto idx = index_of(t);
    if (!idx) throw DomainError("normal form produced a non-standard monomial");
    c.set(*idx);
  }
  return AlgebraElement(*this, std::move(c));
}

inline PolynomialF2 QuotientAlgebra::to_polynomial(const AlgebraElement& a) const {
  std::vector<Monomial> terms;
  a.coords().for_each_set(
      [&](std::size_t u) { terms.push_back(d_->basis[u]); });
  return PolynomialF2::from_terms(vars(), order(), std::move(terms));
}

// Product via the generator tables, iterating the smaller support.
inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same(b);
  const QuotientAlgebra& alg = a.algebra();
  const AlgebraElement& small = a.coords().count() <= b.coords().count() ? a : b;
  const AlgebraElement& big = (&small == &a) ? b : a;
  DynBitset acc(alg.dim());
  small.coords().for_each_set([&](std::size_t u) {
    DynBitset tmp = big.coords();
    alg.apply_monomial(alg.basis()[u], tmp);
    acc ^= tmp;
  });
  return AlgebraElement(alg, std::move(acc));
}

inline int QuotientAlgebra::height(int var) const {
  DynBitset c(dim());
  c.set(0);
  int m = 0;
  while (true) {
    apply_generator(var, c);
    if (c.none()) return m;
    ++m;
  }
}

inline QuotientAlgebra::CupLengthResult QuotientAlgebra::cup_length() const {
  std::vector<int> heights;
  for (int v = kMinVariableIndex; v <= vars().k(); ++v) heights.push_back(height(v));

  int best = 0;
  std::vector<std::uint32_t> best_exps(heights.size(), 0);
  std::vector<std::uint32_t> exps(heights.size(), 0);

  // Depth-first over the exponent box, ascending per axis, so the first
  // tuple reaching a given total is the lexicographically least one. A zero
  // coset prunes the whole componentwise-larger region.
  auto walk = [&](auto&& self, std::size_t level, const DynBitset& coords, int total) -> void {
    if (level == heights.size()) {
      if (total > best) {
        best = total;
        best_exps = exps;
      }
      return;
    }
    int var = static_cast<int>(level) + kMinVariableIndex;
    DynBitset cur = coords;
    for (std::uint32_t e = 0;; ++e) {
      if (e > 0) {
        apply_generator(var, cur);
        if (cur.none()) break;
      }
      exps[level] = e;
      self(self, level + 1, cur, total + static_cast<int>(e));
      if (e >= static_cast<std::uint32_t>(heights[level])) break;
    }
    exps[level] = 0;
  };
  DynBitset one(dim());
  one.set(0);
  walk(walk, 0, one, 0);

  return CupLengthResult{best, Monomial::from_exponents(best_exps)};
}

}  // namespace gf2alg

#endif
