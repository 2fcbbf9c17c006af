#ifndef GF2ALG_TENSOR_HPP
#define GF2ALG_TENSOR_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf2alg/quotient.hpp"
#include "gf2alg/text.hpp"

namespace gf2alg {

// An element of W (x) W over GF(2), stored as one bit row per left basis
// index: bit (u, v) set means the simple tensor basis[u] (x) basis[v] occurs.
// Signs are trivial in characteristic 2, so products need no bookkeeping
// beyond symmetric differences.
class TensorElement {
 public:
  explicit TensorElement(QuotientAlgebra alg)
      : alg_(std::move(alg)), rows_(alg_.dim(), DynBitset(alg_.dim())) {}

  static TensorElement unit(const QuotientAlgebra& alg) {
    TensorElement t(alg);
    t.rows_[0].set(0);
    return t;
  }

  static TensorElement simple(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same(b);
    TensorElement t(a.algebra());
    a.coords().for_each_set([&](std::size_t u) { t.rows_[u] ^= b.coords(); });
    return t;
  }

  const QuotientAlgebra& algebra() const { return alg_; }
  std::size_t dim() const { return alg_.dim(); }

  bool is_zero() const {
    for (const auto& r : rows_) {
      if (r.any()) return false;
    }
    return true;
  }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.count();
    return n;
  }

  bool test(std::uint32_t u, std::uint32_t v) const { return rows_[u].test(v); }
  void flip(std::uint32_t u, std::uint32_t v) { rows_[u].flip(v); }
  const DynBitset& row(std::uint32_t u) const { return rows_[u]; }

  TensorElement& operator^=(const TensorElement& o) {
    check_same(o);
    for (std::size_t u = 0; u < rows_.size(); ++u) rows_[u] ^= o.rows_[u];
    return *this;
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.alg_ == b.alg_ && a.rows_ == b.rows_;
  }

  // Multiplication by (w_var (x) 1): rows combine along the generator table.
  void apply_left_generator(int var) {
    std::vector<DynBitset> out(rows_.size(), DynBitset(alg_.dim()));
    for (std::uint32_t u = 0; u < rows_.size(); ++u) {
      if (rows_[u].none()) continue;
      for (std::uint32_t v : alg_.gen_column(var, u)) out[v] ^= rows_[u];
    }
    rows_ = std::move(out);
  }

  // Multiplication by (1 (x) w_var), via transposition so the action is the
  // cheap row-combining one.
  void apply_right_generator(int var) {
    transpose_in_place();
    apply_left_generator(var);
    transpose_in_place();
  }

  void apply_left_monomial(const Monomial& m) {
    for (int v = kMinVariableIndex; v <= alg_.vars().k(); ++v)
      for (std::uint32_t e = 0; e < m.exponent(v); ++e) apply_left_generator(v);
  }

  void apply_right_monomial(const Monomial& m) {
    transpose_in_place();
    apply_left_monomial(m);
    transpose_in_place();
  }

  // Multiplication by the zero-divisor z(w_var) = 1 (x) w_var + w_var (x) 1.
  void mul_z(int var) {
    TensorElement left = *this;
    left.apply_left_generator(var);
    apply_right_generator(var);
    *this ^= left;
  }

  // General product; expands the factor with fewer terms pairwise. Intended
  // for factors with small support (sums of a few simple tensors).
  TensorElement times(const TensorElement& o) const {
    check_same(o);
    const TensorElement& small = term_count() <= o.term_count() ? *this : o;
    const TensorElement& big = (&small == this) ? o : *this;
    TensorElement acc(alg_);
    for (std::uint32_t u = 0; u < small.rows_.size(); ++u) {
      small.rows_[u].for_each_set([&](std::size_t v) {
        TensorElement part = big;
        part.apply_left_monomial(alg_.basis()[u]);
        part.apply_right_monomial(alg_.basis()[v]);
        acc ^= part;
      });
    }
    return acc;
  }

  // The coordinate swap u (x) v -> v (x) u.
  TensorElement swapped() const {
    TensorElement t = *this;
    t.transpose_in_place();
    return t;
  }

  // Image under the multiplication map W (x) W -> W.
  AlgebraElement product_image() const {
    DynBitset acc(alg_.dim());
    for (std::uint32_t u = 0; u < rows_.size(); ++u) {
      if (rows_[u].none()) continue;
      DynBitset tmp = rows_[u];
      alg_.apply_monomial(alg_.basis()[u], tmp);
      acc ^= tmp;
    }
    return AlgebraElement(alg_, std::move(acc));
  }

  // Least surviving term (by left, then right basis index).
  std::optional<std::pair<Monomial, Monomial>> sample_term() const {
    for (std::uint32_t u = 0; u < rows_.size(); ++u) {
      std::size_t v = rows_[u].first_set();
      if (v < rows_[u].size())
        return std::make_pair(alg_.basis()[u], alg_.basis()[v]);
    }
    return std::nullopt;
  }

  void check_same(const TensorElement& o) const {
    if (!(alg_ == o.alg_)) throw DomainError("tensor elements belong to different algebras");
  }

 private:
  void transpose_in_place() {
    std::vector<DynBitset> out(rows_.size(), DynBitset(alg_.dim()));
    for (std::uint32_t u = 0; u < rows_.size(); ++u)
      rows_[u].for_each_set([&](std::size_t v) { out[v].set(u); });
    rows_ = std::move(out);
  }

  QuotientAlgebra alg_;
  std::vector<DynBitset> rows_;
};

// z(a) = 1 (x) a + a (x) 1 for the generator coset a = w_var.
inline TensorElement z_of_generator(const QuotientAlgebra& alg, int var) {
  AlgebraElement g = alg.generator(var);
  return TensorElement::simple(alg.unit(), g) ^= TensorElement::simple(g, alg.unit());
}

// Expands z(w_2)^{e_2} ... z(w_k)^{e_k} factor by factor; every factor is
// homogeneous, so the partial product vanishing is final (monotone pruning).
// Returns the product, or the first all-zero partial product.
inline TensorElement z_power_product(const QuotientAlgebra& alg,
                                     const std::vector<std::uint32_t>& exponents) {
  if (exponents.size() != static_cast<std::size_t>(alg.vars().k() - 1))
    throw DomainError("need one exponent per generator");
  TensorElement t = TensorElement::unit(alg);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    int var = static_cast<int>(i) + kMinVariableIndex;
    for (std::uint32_t e = 0; e < exponents[i]; ++e) {
      t.mul_z(var);
      if (t.is_zero()) return t;
    }
  }
  return t;
}

struct WitnessResult {
  bool nonzero;
  std::optional<std::pair<Monomial, Monomial>> sample;
};

inline WitnessResult witness_nonzero(const QuotientAlgebra& alg,
                                     const std::vector<std::uint32_t>& exponents) {
  TensorElement t = z_power_product(alg, exponents);
  return WitnessResult{!t.is_zero(), t.sample_term()};
}

struct ZclCertificate {
  int n = 0, k = 0;
  int zcl = 0;
  std::vector<std::uint32_t> witness_exponents;  // lex-least maximizer of the total
  std::string witness_left, witness_right;       // one surviving basis pair there
  std::vector<std::vector<std::uint32_t>> frontier;  // maximal nonvanishing tuples, lex order
};

struct ZclOptions {
  std::size_t max_dim = 4096;  // refuse tensor-square searches past this dimension
};

// Exact zero-divisor cup-length of the algebra.
//
// The kernel of the multiplication map W (x) W -> W is generated, as an ideal,
// by the z(w_i) (see docs/zcl-reduction.md), so its m-th power is nonzero
// exactly when some z(w_2)^{a_2} ... z(w_k)^{a_k} with a_2 + ... + a_k = m is
// nonzero. The search walks that exponent lattice with incremental products;
// a vanished partial product prunes everything componentwise larger. The
// exponent for z(w_i) is capped at 2 ht(w_i) + 1, past which every term of
// the power has a vanishing side.
inline std::pair<int, ZclCertificate> zcl_exact(const QuotientAlgebra& alg,
                                                const ZclOptions& options = {}) {
  if (alg.dim() > options.max_dim) {
    // Refuse, but report the verified lower bound zcl >= cl: over GF(2) the
    // slice of z(a_1)...z(a_m) in degree (0, *) equals 1 (x) a_1...a_m.
    auto cl = alg.cup_length();
    throw BudgetExceeded("zcl_exact: dimension " + std::to_string(alg.dim()) +
                             " exceeds the configured budget " +
                             std::to_string(options.max_dim) + "; verified lower bound " +
                             std::to_string(cl.length),
                         cl.length);
  }

  const std::size_t axes = static_cast<std::size_t>(alg.vars().k() - 1);
  std::vector<std::uint32_t> caps(axes);
  for (std::size_t i = 0; i < axes; ++i)
    caps[i] = 2u * static_cast<std::uint32_t>(alg.height(static_cast<int>(i) +
                                                         kMinVariableIndex)) +
              1u;

  ZclCertificate cert;
  cert.n = alg.spec().n;
  cert.k = alg.spec().k;
  int best = -1;

  // For each prefix (a_2, ..., a_{k-1}) with nonzero partial product, the
  // largest last-axis exponent whose product is still nonzero.
  std::map<std::vector<std::uint32_t>, std::uint32_t> last_max;
  std::vector<std::uint32_t> prefix(axes >= 1 ? axes - 1 : 0, 0);

  auto record = [&](const std::vector<std::uint32_t>& pref, std::uint32_t cmax,
                    const TensorElement& at_cmax) {
    last_max[pref] = cmax;
    int total = static_cast<int>(cmax);
    for (auto e : pref) total += static_cast<int>(e);
    if (total > best) {
      best = total;
      cert.witness_exponents = pref;
      cert.witness_exponents.push_back(cmax);
      auto sample = at_cmax.sample_term();
      cert.witness_left = format_monomial(sample->first);
      cert.witness_right = format_monomial(sample->second);
    }
  };

  auto walk = [&](auto&& self, std::size_t level, const TensorElement& t) -> void {
    int var = static_cast<int>(level) + kMinVariableIndex;
    if (level + 1 == axes) {
      TensorElement cur = t;
      TensorElement last_nonzero = cur;
      std::uint32_t cmax = 0;
      for (std::uint32_t e = 0; e < caps[level]; ++e) {
        cur.mul_z(var);
        if (cur.is_zero()) break;
        last_nonzero = cur;
        cmax = e + 1;
      }
      record(prefix, cmax, last_nonzero);
      return;
    }
    TensorElement cur = t;
    for (std::uint32_t e = 0; e <= caps[level]; ++e) {
      if (e > 0) {
        cur.mul_z(var);
        if (cur.is_zero()) break;
      }
      prefix[level] = e;
      self(self, level + 1, cur);
    }
    prefix[level] = 0;
  };
  walk(walk, 0, TensorElement::unit(alg));

  cert.zcl = best;

  // Maximal nonvanishing tuples: the last axis is maximal by construction;
  // bumping any other axis must leave the recorded maximum behind.
  for (const auto& [pref, cmax] : last_max) {
    bool maximal = true;
    for (std::size_t j = 0; j < pref.size() && maximal; ++j) {
      std::vector<std::uint32_t> bumped = pref;
      ++bumped[j];
      auto it = last_max.find(bumped);
      if (it != last_max.end() && it->second >= cmax) maximal = false;
    }
    if (maximal) {
      std::vector<std::uint32_t> tuple = pref;
      tuple.push_back(cmax);
      cert.frontier.push_back(std::move(tuple));
    }
  }
  std::sort(cert.frontier.begin(), cert.frontier.end());

  return {best, cert};
}

// Well-definedness and basis compatibility of the degree-preserving algebra
// map W_{2^t-1,3} -> W_{2^t-2,4} fixing the generator cosets: the k=3
// generating relations must hold in the k=4 quotient, and a w4-free standard
// monomial stays standard after multiplication by w4^d, d <= 2^{t-2}-3, with
// distinct (monomial, d) giving distinct basis elements.
inline bool psi_check(int t, std::string* detail = nullptr) {
  if (t < 4) throw DomainError("psi_check requires t >= 4");
  auto fail = [&](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };
  const long p2t = 1l << t;
  const GroebnerBasis& target = known_gb(static_cast<int>(p2t) - 2, 4);
  for (const auto& g : ideal_generators(IdealSpec(static_cast<int>(p2t) - 1, 3))) {
    if (g.is_zero()) continue;
    if (!contains(target, detail::to_k4(g)))
      return fail("generator " + format_polynomial(g) + " not sent to zero");
  }
  const GroebnerBasis& source = known_gb(static_cast<int>(p2t) - 1, 3);
  std::vector<Monomial> b3 = standard_monomials_all(source);
  std::vector<Monomial> images;
  for (const auto& sigma : b3) {
    for (std::uint32_t d = 0; d + 3 <= (1u << (t - 2)); ++d) {
      Monomial m = sigma * Monomial::power(4, d);
      for (const auto& lm : target.leading_monomials())
        if (lm.divides(m))
          return fail("image " + format_monomial(m) + " is not a standard monomial");
      images.push_back(m);
    }
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    return fail("distinct (monomial, d) pairs collide");
  return true;
}

}  // namespace gf2alg

#endif
