#ifndef GF2ALG_RANDOM_HPP
#define GF2ALG_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gf2alg/polynomial.hpp"

namespace gf2alg {

inline constexpr std::uint64_t kDefaultSeed = 0xf2a15eedULL;

using Rng = std::mt19937_64;

inline Monomial random_monomial(Rng& rng, VariableSet vars, std::uint32_t max_degree) {
  Monomial m;
  std::uint32_t budget = max_degree;
  for (int v = kMinVariableIndex; v <= vars.k(); ++v) {
    std::uint32_t cap = budget / static_cast<std::uint32_t>(v);
    std::uniform_int_distribution<std::uint32_t> dist(0, cap);
    std::uint32_t e = dist(rng);
    m = m * Monomial::power(v, e);
    budget -= e * static_cast<std::uint32_t>(v);
  }
  return m;
}

inline PolynomialF2 random_polynomial(Rng& rng, VariableSet vars, const MonomialOrder& order,
                                      std::uint32_t max_degree, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::vector<Monomial> terms;
  std::size_t n = count(rng);
  terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) terms.push_back(random_monomial(rng, vars, max_degree));
  return PolynomialF2::from_terms(vars, order, std::move(terms));
}

// Nonzero variant for tests that need p != 0.
inline PolynomialF2 random_nonzero_polynomial(Rng& rng, VariableSet vars,
                                              const MonomialOrder& order,
                                              std::uint32_t max_degree, std::size_t max_terms) {
  while (true) {
    PolynomialF2 p = random_polynomial(rng, vars, order, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

}  // namespace gf2alg

#endif
