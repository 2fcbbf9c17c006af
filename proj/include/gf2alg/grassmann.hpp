#ifndef GF2ALG_GRASSMANN_HPP
#define GF2ALG_GRASSMANN_HPP

#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf2alg/groebner.hpp"
#include "gf2alg/random.hpp"
#include "gf2alg/text.hpp"

namespace gf2alg {

// Parameters (n, k) of the ideal I_{n,k} generated by g_{n-k+1}, ..., g_n.
struct IdealSpec {
  int n;
  int k;

  IdealSpec(int n, int k) : n(n), k(k) {
    if (k < 2 || k > kMaxVariableIndex)
      throw DomainError("ideal spec requires 2 <= k <= 8");
    if (n < 2 * k)
      throw DomainError("ideal spec requires n >= 2k, got n=" + std::to_string(n) +
                        ", k=" + std::to_string(k));
  }

  friend bool operator==(IdealSpec a, IdealSpec b) { return a.n == b.n && a.k == b.k; }
};

// The family g_r for one k, defined by
//   (1 + w_2 + ... + w_k)(g_0 + g_1 + g_2 + ...) = 1,
// equivalently g_0 = 1, g_r = 0 for -k+1 <= r <= -1, and
//   g_r = w_2 g_{r-2} + ... + w_k g_{r-k}  for r >= 1.
// Values are memoized; access is serialized on an internal mutex.
class GPolyFamily {
 public:
  explicit GPolyFamily(int k)
      : vars_(k), order_(MonomialOrder::family_order(VariableSet(k))) {}

  VariableSet vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }

  PolynomialF2 at(long r) const {
    if (r < -(vars_.k() - 1))
      throw DomainError("g_r undefined for r < -k+1 (r=" + std::to_string(r) + ")");
    if (r < 0) return PolynomialF2::zero(vars_, order_);
    std::lock_guard<std::mutex> lock(mutex_);
    ensure_locked(static_cast<std::size_t>(r));
    return table_[static_cast<std::size_t>(r)];
  }

  // Independent route: direct expansion of the closed form. The coefficient
  // of w_2^{a_2} ... w_k^{a_k} (with sum of i*a_i equal to r) is the chained
  // binomial product C(a_2+...+a_k, a_2) * C(a_3+...+a_k, a_3) * ..., taken
  // mod 2.
  PolynomialF2 closed_form(long r) const {
    if (r < 0) return PolynomialF2::zero(vars_, order_);
    std::vector<Monomial> terms;
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(vars_.var_count()), 0);
    closed_form_rec(static_cast<std::uint32_t>(r), 0, exps, terms);
    return PolynomialF2::from_terms(vars_, order_, std::move(terms));
  }

  static const GPolyFamily& for_k(int k);

 private:
  void ensure_locked(std::size_t r) const {
    if (table_.empty()) table_.push_back(PolynomialF2::one(vars_, order_));
    while (table_.size() <= r) {
      long next = static_cast<long>(table_.size());
      PolynomialF2 sum = PolynomialF2::zero(vars_, order_);
      for (int j = kMinVariableIndex; j <= vars_.k(); ++j) {
        long idx = next - j;
        if (idx < 0) continue;
        sum += table_[static_cast<std::size_t>(idx)].times_monomial(Monomial::variable(j));
      }
      table_.push_back(std::move(sum));
    }
  }

  void closed_form_rec(std::uint32_t remaining, int var_slot,
                       std::vector<std::uint32_t>& exps, std::vector<Monomial>& terms) const {
    if (var_slot == vars_.var_count()) {
      if (remaining) return;
      std::uint64_t suffix = 0;
      for (int i = vars_.var_count() - 1; i >= 1; --i) {
        suffix += exps[static_cast<std::size_t>(i)];
        // chained factor C(a_i + sum of the later exponents, a_i)
        std::uint64_t ai = exps[static_cast<std::size_t>(i - 1)];
        if (binom_parity(ai + suffix, ai) == 0) return;
      }
      terms.push_back(Monomial::from_exponents(exps));
      return;
    }
    int var = var_slot + kMinVariableIndex;
    std::uint32_t max_e = remaining / static_cast<std::uint32_t>(var);
    for (std::uint32_t e = 0; e <= max_e; ++e) {
      exps[static_cast<std::size_t>(var_slot)] = e;
      closed_form_rec(remaining - e * static_cast<std::uint32_t>(var), var_slot + 1, exps, terms);
    }
    exps[static_cast<std::size_t>(var_slot)] = 0;
  }

  VariableSet vars_;
  MonomialOrder order_;
  mutable std::mutex mutex_;
  mutable std::deque<PolynomialF2> table_;
};

inline const GPolyFamily& GPolyFamily::for_k(int k) {
  static std::mutex mu;
  static std::map<int, GPolyFamily*> families;
  std::lock_guard<std::mutex> lock(mu);
  auto it = families.find(k);
  if (it == families.end()) it = families.emplace(k, new GPolyFamily(k)).first;
  return *it->second;
}

inline PolynomialF2 g_poly(int k, long r) { return GPolyFamily::for_k(k).at(r); }
inline PolynomialF2 g_poly_closed(int k, long r) { return GPolyFamily::for_k(k).closed_form(r); }

// The k generators g_{n-k+1}, ..., g_n of I_{n,k}. Some may be zero.
inline std::vector<PolynomialF2> ideal_generators(IdealSpec spec) {
  std::vector<PolynomialF2> gens;
  gens.reserve(static_cast<std::size_t>(spec.k));
  for (long r = spec.n - spec.k + 1; r <= spec.n; ++r) gens.push_back(g_poly(spec.k, r));
  return gens;
}

namespace detail {

inline std::optional<int> exact_log2(long v) {
  if (v < 1) return std::nullopt;
  int t = 0;
  while ((1l << t) < v) ++t;
  return (1l << t) == v ? std::optional<int>(t) : std::nullopt;
}

// The w4-free part of the known bases: { g_{2^t-3+2^i} : 0 <= i <= t-1 },
// built over k variables (the polynomials agree for k = 3 and k = 4).
inline std::vector<PolynomialF2> base_family(int k, int t) {
  std::vector<PolynomialF2> f;
  for (int i = 0; i < t; ++i) f.push_back(g_poly(k, (1l << t) - 3 + (1l << i)));
  return f;
}

// Leading monomials of base_family under the family order:
// w2^(2^(t-1)-2^i) w3^(2^i-1).
inline std::vector<Monomial> base_family_lms(int t) {
  std::vector<Monomial> lms;
  for (int i = 0; i < t; ++i)
    lms.push_back(Monomial::power(2, (1u << (t - 1)) - (1u << i)) *
                  Monomial::power(3, (1u << i) - 1));
  return lms;
}

}  // namespace detail

// Leading-monomial set of the known basis for I_{n,k}, per the tabulated
// families (see known_gb). Sorted ascending under the family order.
inline std::vector<Monomial> known_lm_set(int n, int k) {
  std::optional<int> t;
  std::vector<Monomial> lms;
  if (k == 3) {
    t = detail::exact_log2(n);
    if (!t) t = detail::exact_log2(n + 1l);
    if (!t || *t < 3) throw DomainError("no tabulated basis for n=" + std::to_string(n) + ", k=3");
    lms = detail::base_family_lms(*t);
  } else if (k == 4) {
    if ((t = detail::exact_log2(n)) && *t >= 3) {
      lms = detail::base_family_lms(*t);
      lms.push_back(Monomial::power(4, 1u << (*t - 2)));
    } else if ((t = detail::exact_log2(n - 1l)) && *t >= 3) {
      lms = detail::base_family_lms(*t);
      lms.push_back(Monomial::power(4, 1u << (*t - 2)));
    } else if ((t = detail::exact_log2(n + 1l)) && *t >= 4) {
      lms = detail::base_family_lms(*t);
      lms.push_back(Monomial::power(4, (1u << (*t - 2)) - 1));
    } else if ((t = detail::exact_log2(n + 2l)) && *t >= 4) {
      lms = detail::base_family_lms(*t);
      lms.push_back(Monomial::power(4, (1u << (*t - 2)) - 1));
      lms.push_back(Monomial::variable(3) * Monomial::power(4, (1u << (*t - 2)) - 2));
    } else {
      throw DomainError("no tabulated basis for n=" + std::to_string(n) + ", k=4");
    }
  } else {
    throw DomainError("tabulated bases exist only for k=3 and k=4");
  }
  MonomialOrder ord = MonomialOrder::family_order(VariableSet(k));
  std::sort(lms.begin(), lms.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  return lms;
}

// The tabulated Groebner basis of I_{n,k} where one is known:
//   k=3, n in {2^t-1, 2^t}, t >= 3:   F = { g_{2^t-3+2^i} : 0 <= i <= t-1 }
//   k=4, n in {2^t, 2^t+1}, t >= 3:   F union { g_{2^t} }
//   k=4, n = 2^t-1,        t >= 4:    F union { g_{2^t-4} }
//   k=4, n = 2^t-2,        t >= 4:    F union { g_{2^t-4}, g_{2^t-5} }
// The basis property and the expected leading-monomial set are verified on
// first construction (results are memoized per (n, k)).
inline const GroebnerBasis& known_gb(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, GroebnerBasis*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  std::vector<Monomial> expected_lms = known_lm_set(n, k);  // throws if not tabulated
  std::vector<PolynomialF2> gens;
  std::optional<int> t;
  if (k == 3) {
    t = detail::exact_log2(n);
    if (!t) t = detail::exact_log2(n + 1l);
    gens = detail::base_family(3, *t);
  } else {
    if ((t = detail::exact_log2(n)) && *t >= 3) {
      gens = detail::base_family(4, *t);
      gens.push_back(g_poly(4, 1l << *t));
    } else if ((t = detail::exact_log2(n - 1l)) && *t >= 3) {
      gens = detail::base_family(4, *t);
      gens.push_back(g_poly(4, 1l << *t));
    } else if ((t = detail::exact_log2(n + 1l))) {
      gens = detail::base_family(4, *t);
      gens.push_back(g_poly(4, (1l << *t) - 4));
    } else {
      t = detail::exact_log2(n + 2l);
      gens = detail::base_family(4, *t);
      gens.push_back(g_poly(4, (1l << *t) - 4));
      gens.push_back(g_poly(4, (1l << *t) - 5));
    }
  }

  auto* basis = new GroebnerBasis(std::move(gens));
  if (basis->lm_set() != expected_lms)
    throw DomainError("tabulated basis has unexpected leading monomials for n=" +
                      std::to_string(n) + ", k=" + std::to_string(k));
  if (!is_groebner(*basis))
    throw DomainError("tabulated generating set fails the Buchberger criterion for n=" +
                      std::to_string(n) + ", k=" + std::to_string(k));
  cache.emplace(key, basis);
  return *basis;
}

inline bool has_known_gb(int n, int k) {
  try {
    known_lm_set(n, k);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Identity verification

enum class IdentityId { A, B, C, D, E, F, G, H, I, J };

inline const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::A: return "a: frobenius-shifted recurrence";
    case IdentityId::B: return "b: g_{2^t-3} = 0";
    case IdentityId::C: return "c: g_{2^t-3+2^i} agrees for k=3,4";
    case IdentityId::D: return "d: w4-layer expansion of g_{2^t-4}";
    case IdentityId::E: return "e: w3 g_r^2 = g_{2r+3}";
    case IdentityId::F: return "f: odd pure w4 power identity";
    case IdentityId::G: return "g: even pure w4 power identity";
    case IdentityId::H: return "h: mixed w3/w4 power identity";
    case IdentityId::I: return "i: w4-free intersection of ideals";
    case IdentityId::J: return "j: w4-layer membership equivalence";
  }
  return "?";
}

inline char identity_letter(IdentityId id) {
  return static_cast<char>('a' + static_cast<int>(id));
}

inline std::optional<IdentityId> identity_from_letter(char c) {
  if (c < 'a' || c > 'j') return std::nullopt;
  return static_cast<IdentityId>(c - 'a');
}

struct IdentityInstance {
  std::string label;    // e.g. "t=4" or "t=4,k=3"
  bool pass = false;
  double millis = 0.0;
  std::string counterexample;  // empty when pass
};

struct IdentityReport {
  IdentityId id = IdentityId::A;
  std::string params;
  std::vector<IdentityInstance> instances;

  bool all_pass() const {
    for (const auto& inst : instances)
      if (!inst.pass) return false;
    return true;
  }

  std::optional<std::string> first_counterexample() const {
    for (const auto& inst : instances)
      if (!inst.pass) return inst.label + ": " + inst.counterexample;
    return std::nullopt;
  }
};

namespace detail {

struct IdentityCheck {
  bool pass = true;
  std::string counterexample;

  void fail(const std::string& what) {
    if (pass) {
      pass = false;
      counterexample = what;
    }
  }

  void expect_equal(const PolynomialF2& lhs, const PolynomialF2& rhs, const std::string& what) {
    if (!(lhs == rhs)) fail(what + ": " + format_polynomial(lhs + rhs) + " should be 0");
  }
};

inline PolynomialF2 to_k4(const PolynomialF2& p) {
  VariableSet v4(4);
  return p.converted_to(v4, MonomialOrder::family_order(v4));
}

// One identity instance at scale t.
inline IdentityCheck run_identity_instance(IdentityId id, int t, Rng& rng, int samples) {
  IdentityCheck chk;
  VariableSet v3(3), v4(4);
  MonomialOrder o3 = MonomialOrder::family_order(v3);
  MonomialOrder o4 = MonomialOrder::family_order(v4);
  const long p2t = 1l << t;

  switch (id) {
    case IdentityId::A: {
      // g_r = sum_j w_j^{2^s} g_{r - j 2^s} for r >= 1 + k(2^s - 1).
      for (int k = 3; k <= 4; ++k) {
        for (int i = 0; i < samples; ++i) {
          std::uniform_int_distribution<int> sdist(0, std::max(0, t - 2));
          int s = sdist(rng);
          long rmin = 1 + static_cast<long>(k) * ((1l << s) - 1);
          std::uniform_int_distribution<long> rdist(rmin, std::max(rmin, p2t));
          long r = rdist(rng);
          PolynomialF2 rhs = PolynomialF2::zero(VariableSet(k),
                                                MonomialOrder::family_order(VariableSet(k)));
          for (int j = 2; j <= k; ++j)
            rhs += g_poly(k, r - static_cast<long>(j) * (1l << s))
                       .times_monomial(Monomial::power(j, 1u << s));
          chk.expect_equal(g_poly(k, r), rhs,
                           "k=" + std::to_string(k) + ",r=" + std::to_string(r) +
                               ",s=" + std::to_string(s));
          if (!chk.pass) return chk;
        }
      }
      break;
    }
    case IdentityId::B: {
      for (int k = 3; k <= 4; ++k) {
        if (!g_poly(k, p2t - 3).is_zero())
          chk.fail("g_{2^t-3} nonzero for k=" + std::to_string(k));
      }
      break;
    }
    case IdentityId::C: {
      for (int i = 0; i < t; ++i) {
        long r = p2t - 3 + (1l << i);
        chk.expect_equal(g_poly(4, r), to_k4(g_poly(3, r)), "i=" + std::to_string(i));
        if (!chk.pass) return chk;
      }
      break;
    }
    case IdentityId::D: {
      PolynomialF2 rhs = PolynomialF2::zero(v4, o4);
      for (int i = 0; i <= t - 2; ++i) {
        long r3 = (1l << (t - i)) - 4;
        rhs += to_k4(g_poly(3, r3))
                   .frobenius_pow(i)
                   .times_monomial(Monomial::power(4, (1u << i) - 1));
      }
      chk.expect_equal(g_poly(4, p2t - 4), rhs, "t=" + std::to_string(t));
      break;
    }
    case IdentityId::E: {
      // Boundary values plus a window at scale t.
      std::vector<long> rs;
      for (long r = -3; r <= 24; ++r) rs.push_back(r);
      for (long r = p2t / 2 - 4; r <= p2t / 2 + 4; ++r)
        if (r > 24) rs.push_back(r);
      for (long r : rs) {
        PolynomialF2 lhs = g_poly(4, r).square().times_monomial(Monomial::variable(3));
        chk.expect_equal(lhs, g_poly(4, 2 * r + 3), "r=" + std::to_string(r));
        if (!chk.pass) return chk;
      }
      break;
    }
    case IdentityId::F: {
      PolynomialF2 lhs =
          PolynomialF2::monomial(v4, o4, Monomial::power(4, (1u << (t - 1)) - 1));
      PolynomialF2 rhs = g_poly(4, 2 * p2t - 4) +
                         g_poly(4, p2t - 4).times_monomial(Monomial::power(2, 1u << (t - 1))) +
                         g_poly(4, p2t / 2 - 4).times_monomial(Monomial::power(3, 1u << (t - 1)));
      chk.expect_equal(lhs, rhs, "t=" + std::to_string(t));
      break;
    }
    case IdentityId::G: {
      // beta_t is extracted by dividing w2^{2^{t-1}} + g_{2^t}^{(3)} by w3,
      // which the identity asserts is possible.
      PolynomialF2 dividend =
          PolynomialF2::monomial(v3, o3, Monomial::power(2, 1u << (t - 1))) + g_poly(3, p2t);
      PolynomialF2 beta3(v3, o3);
      if (!dividend.divide_by_variable(3, beta3)) {
        chk.fail("w2^{2^{t-1}} + g_{2^t}^{(3)} is not divisible by w3");
        break;
      }
      PolynomialF2 beta = to_k4(beta3);
      PolynomialF2 alpha =
          g_poly(4, p2t / 2 - 4).square().times_monomial(Monomial::variable(2));
      PolynomialF2 lhs =
          PolynomialF2::monomial(v4, o4, Monomial::power(4, (1u << (t - 1)) - 2));
      PolynomialF2 rhs = alpha * g_poly(4, p2t - 2) + g_poly(4, p2t - 4).square() +
                         beta * g_poly(4, p2t - 5) +
                         g_poly(4, p2t / 2 - 5)
                             .times_monomial(Monomial::power(3, (1u << (t - 1)) - 1));
      chk.expect_equal(lhs, rhs, "t=" + std::to_string(t));
      break;
    }
    case IdentityId::H: {
      std::uint32_t q = 1u << (t - 2);
      PolynomialF2 lhs = PolynomialF2::monomial(
          v4, o4, Monomial::power(3, q - 1) * Monomial::power(4, q - 2));
      PolynomialF2 rhs = g_poly(4, p2t - 5).times_monomial(Monomial::power(3, q - 2));
      for (int i = 2; i <= t - 2; ++i)
        rhs += g_poly(4, p2t - 3 + (1l << i))
                   .times_monomial(Monomial::power(3, q - (1u << i)) *
                                   Monomial::power(4, (1u << (i - 1)) - 2));
      chk.expect_equal(lhs, rhs, "t=" + std::to_string(t));
      break;
    }
    case IdentityId::I: {
      const GroebnerBasis& f3 = known_gb(static_cast<int>(p2t), 3);
      const GroebnerBasis& f4 = known_gb(static_cast<int>(p2t), 4);
      // Containment: the k=3 generators lie in the k=4 ideal.
      for (const auto& g : ideal_generators(IdealSpec(static_cast<int>(p2t), 3))) {
        if (g.is_zero()) continue;
        if (!contains(f4, to_k4(g))) {
          chk.fail("k=3 generator " + format_polynomial(g) + " not in the k=4 ideal");
          return chk;
        }
      }
      // Random members of the k=4 ideal, filtered to their w4-free part (the
      // reduction mod w4 sends generator combinations to combinations of the
      // k=3 generators), must lie in the k=3 ideal.
      auto gens4 = ideal_generators(IdealSpec(static_cast<int>(p2t), 4));
      for (int i = 0; i < samples; ++i) {
        PolynomialF2 f = PolynomialF2::zero(v4, o4);
        for (const auto& g : gens4)
          f += random_polynomial(rng, v4, o4, 12, 4) * g;
        PolynomialF2 h = f.substitute_zero(4).converted_to(v3, o3);
        if (!contains(f3, h)) {
          chk.fail("w4-filtered member escapes the k=3 ideal (sample " + std::to_string(i) + ")");
          return chk;
        }
      }
      // Membership equivalence on random w4-free polynomials.
      for (int i = 0; i < samples; ++i) {
        PolynomialF2 u = random_polynomial(rng, v3, o3, 3 * static_cast<std::uint32_t>(p2t) / 2, 6);
        if (contains(f3, u) != contains(f4, to_k4(u))) {
          chk.fail("membership answers differ on " + format_polynomial(u));
          return chk;
        }
      }
      break;
    }
    case IdentityId::J: {
      const GroebnerBasis& f3 = known_gb(static_cast<int>(p2t), 3);
      auto layered_check = [&](const GroebnerBasis& f4, std::uint32_t max_j) {
        // Drawers: all-members, all-random, and a mixture.
        for (int mode = 0; mode < 3 && chk.pass; ++mode) {
          for (int rep = 0; rep < samples && chk.pass; ++rep) {
            std::uniform_int_distribution<std::uint32_t> jdist(0, max_j);
            std::uniform_int_distribution<int> cnt(1, 3);
            int layers = cnt(rng);
            PolynomialF2 sum = PolynomialF2::zero(v4, o4);
            bool all_members = true;
            for (int l = 0; l < layers; ++l) {
              std::uint32_t j = jdist(rng);
              PolynomialF2 p(v3, o3);
              bool member = mode == 0 || (mode == 2 && (rng() & 1));
              if (member) {
                for (const auto& g : f3.generators())
                  p += random_polynomial(rng, v3, o3, 10, 3) * g;
              } else {
                p = random_polynomial(rng, v3, o3, 2 * static_cast<std::uint32_t>(p2t), 5);
                if (contains(f3, p)) member = true;  // accidental member
              }
              all_members = all_members && member;
              sum += to_k4(p).times_monomial(Monomial::power(4, j));
            }
            bool in4 = contains(f4, sum);
            // The layered sum lies in the k=4 ideal iff every layer
            // coefficient lies in the k=3 ideal. With distinct layers the
            // coefficients are the p's; layers can collide, so recompute the
            // coefficient-wise truth from the sum itself.
            bool expected = true;
            PolynomialF2 rest = sum;
            for (std::uint32_t j = 0; j <= max_j && expected; ++j) {
              std::vector<Monomial> slice;
              for (const auto& m : rest.terms())
                if (m.exponent(4) == j) slice.push_back(m / Monomial::power(4, j));
              if (slice.empty()) continue;
              PolynomialF2 pj = PolynomialF2::from_terms(v3, o3, std::move(slice));
              expected = contains(f3, pj);
            }
            if (in4 != expected)
              chk.fail("layered membership mismatch (mode " + std::to_string(mode) + ")");
          }
        }
      };
      layered_check(known_gb(static_cast<int>(p2t), 4), (1u << (t - 2)) - 1);
      if (t >= 4 && chk.pass)
        layered_check(known_gb(static_cast<int>(p2t) - 1, 4), (1u << (t - 2)) - 2);
      break;
    }
  }
  return chk;
}

}  // namespace detail

inline int identity_min_t(IdentityId id) {
  switch (id) {
    case IdentityId::D: return 2;
    case IdentityId::G: return 4;
    default: return 3;
  }
}

// Checks one identity over t in [t_min, t_max] (clamped below to the range
// where the identity is defined). Randomized instances draw from `rng_seed`.
inline IdentityReport verify_identity(IdentityId id, int t_min, int t_max,
                                      std::uint64_t rng_seed = kDefaultSeed, int samples = 8) {
  IdentityReport report;
  report.id = id;
  t_min = std::max(t_min, identity_min_t(id));
  report.params = "t=" + std::to_string(t_min) + ".." + std::to_string(t_max);
  for (int t = t_min; t <= t_max; ++t) {
    Rng rng(rng_seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t)));
    auto start = std::chrono::steady_clock::now();
    detail::IdentityCheck chk = detail::run_identity_instance(id, t, rng, samples);
    auto stop = std::chrono::steady_clock::now();
    IdentityInstance inst;
    inst.label = "t=" + std::to_string(t);
    inst.pass = chk.pass;
    inst.counterexample = chk.counterexample;
    inst.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    report.instances.push_back(std::move(inst));
  }
  return report;
}

}  // namespace gf2alg

#endif
