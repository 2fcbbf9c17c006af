#ifndef GF2ALG_MONOMIAL_HPP
#define GF2ALG_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gf2alg/errors.hpp"

namespace gf2alg {

// The variables are w_2, w_3, ..., w_k with weight(w_i) = i.
inline constexpr int kMinVariableIndex = 2;
inline constexpr int kMaxVariableIndex = 8;
inline constexpr int kMaxVariableCount = kMaxVariableIndex - kMinVariableIndex + 1;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;  // exponents live in uint16

class VariableSet {
 public:
  explicit VariableSet(int k) : k_(static_cast<std::uint8_t>(k)) {
    if (k < kMinVariableIndex || k > kMaxVariableIndex)
      throw DomainError("variable set requires 2 <= k <= 8, got k=" + std::to_string(k));
  }

  int k() const { return k_; }
  int var_count() const { return k_ - 1; }
  bool contains(int var) const { return var >= kMinVariableIndex && var <= k_; }

  friend bool operator==(VariableSet a, VariableSet b) { return a.k_ == b.k_; }
  friend bool operator!=(VariableSet a, VariableSet b) { return !(a == b); }

 private:
  std::uint8_t k_;
};

// Exponent vector with cached weighted degree. Slot i holds the exponent of
// w_{i+2}; unused slots stay zero, so monomials embed across variable sets.
class Monomial {
 public:
  Monomial() : exp_{}, degree_(0) {}

  static Monomial variable(int var) {
    Monomial m;
    m.check_var(var);
    m.exp_[var - kMinVariableIndex] = 1;
    m.degree_ = static_cast<std::uint32_t>(var);
    return m;
  }

  // Exponents listed starting at w_2.
  static Monomial from_exponents(std::initializer_list<std::uint32_t> exps) {
    return from_exponents(std::vector<std::uint32_t>(exps));
  }

  static Monomial from_exponents(const std::vector<std::uint32_t>& exps) {
    if (exps.size() > kMaxVariableCount)
      throw DomainError("too many exponents for a monomial");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m = m * power(static_cast<int>(i) + 2, exps[i]);
    return m;
  }

  static Monomial power(int var, std::uint32_t e) {
    Monomial m;
    m.check_var(var);
    if (e > kMaxExponent) throw OverflowError("monomial exponent exceeds 2^16-1");
    m.exp_[var - kMinVariableIndex] = static_cast<std::uint16_t>(e);
    m.degree_ = static_cast<std::uint32_t>(var) * e;
    return m;
  }

  std::uint32_t exponent(int var) const {
    check_var(var);
    return exp_[var - kMinVariableIndex];
  }

  std::uint32_t degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }

  // Largest variable index with a nonzero exponent, or 0 for the unit.
  int max_variable() const {
    for (int i = kMaxVariableCount - 1; i >= 0; --i)
      if (exp_[i]) return i + kMinVariableIndex;
    return 0;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVariableCount; ++i)
      if (exp_[i] > m.exp_[i]) return false;
    return true;
  }

  bool coprime_with(const Monomial& m) const {
    for (int i = 0; i < kMaxVariableCount; ++i)
      if (exp_[i] && m.exp_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVariableCount; ++i) {
      std::uint32_t e = static_cast<std::uint32_t>(exp_[i]) + m.exp_[i];
      if (e > kMaxExponent) throw OverflowError("monomial exponent exceeds 2^16-1");
      r.exp_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = degree_ + m.degree_;
    return r;
  }

  // Exact quotient; pre: m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVariableCount; ++i) {
      if (m.exp_[i] > exp_[i]) throw DomainError("monomial division is not exact");
      r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - m.exp_[i]);
    }
    r.degree_ = degree_ - m.degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.degree_ = 0;
    for (int i = 0; i < kMaxVariableCount; ++i) {
      r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
      r.degree_ += static_cast<std::uint32_t>(r.exp_[i]) * (i + kMinVariableIndex);
    }
    return r;
  }

  Monomial pow(std::uint32_t e) const {
    Monomial r;
    for (int i = 0; i < kMaxVariableCount; ++i) {
      std::uint64_t v = static_cast<std::uint64_t>(exp_[i]) * e;
      if (v > kMaxExponent) throw OverflowError("monomial exponent exceeds 2^16-1");
      r.exp_[i] = static_cast<std::uint16_t>(v);
    }
    r.degree_ = degree_ * e;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp_ == b.exp_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // Arbitrary strict total order for use as a map key (not a monomial order).
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int i = 0; i < kMaxVariableCount; ++i) {
      h ^= exp_[i];
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  static void check_var(int var) {
    if (var < kMinVariableIndex || var > kMaxVariableIndex)
      throw DomainError("variable index out of range: w" + std::to_string(var));
  }

  std::array<std::uint16_t, kMaxVariableCount> exp_;
  std::uint32_t degree_;
};

// Pure lexicographic order reading exponents along a precedence permutation,
// e.g. lex({4,2,3}) is the order with w4 > w2 > w3.
class MonomialOrder {
 public:
  static MonomialOrder lex(const std::vector<int>& precedence) {
    if (precedence.empty() || precedence.size() > kMaxVariableCount)
      throw DomainError("monomial order precedence must list 1..7 variables");
    MonomialOrder o;
    o.n_ = static_cast<std::uint8_t>(precedence.size());
    std::array<bool, kMaxVariableCount> seen{};
    for (std::size_t i = 0; i < precedence.size(); ++i) {
      int v = precedence[i];
      if (v < kMinVariableIndex || v > kMaxVariableIndex)
        throw DomainError("monomial order mentions invalid variable w" + std::to_string(v));
      if (seen[v - kMinVariableIndex])
        throw DomainError("monomial order repeats variable w" + std::to_string(v));
      seen[v - kMinVariableIndex] = true;
      o.prec_[i] = static_cast<std::uint8_t>(v);
    }
    return o;
  }

  // w2 > w3 > ... > wk.
  static MonomialOrder default_lex(VariableSet vars) {
    std::vector<int> p;
    for (int v = kMinVariableIndex; v <= vars.k(); ++v) p.push_back(v);
    return lex(p);
  }

  // The order used throughout for each variable count: w2>w3 for k=3,
  // w4>w2>w3 for k=4, default lex otherwise.
  static MonomialOrder family_order(VariableSet vars) {
    if (vars.k() == 3) return lex({2, 3});
    if (vars.k() == 4) return lex({4, 2, 3});
    return default_lex(vars);
  }

  int var_count() const { return n_; }

  std::vector<int> precedence() const {
    return std::vector<int>(prec_.begin(), prec_.begin() + n_);
  }

  bool covers(VariableSet vars) const {
    if (n_ != vars.var_count()) return false;
    std::array<bool, kMaxVariableCount> seen{};
    for (int i = 0; i < n_; ++i) seen[prec_[i] - kMinVariableIndex] = true;
    for (int v = kMinVariableIndex; v <= vars.k(); ++v)
      if (!seen[v - kMinVariableIndex]) return false;
    return true;
  }

  // <0, 0, >0 as a compares below, equal to, above b.
  int compare(const Monomial& a, const Monomial& b) const {
    for (int i = 0; i < n_; ++i) {
      std::uint32_t ea = a.exponent(prec_[i]);
      std::uint32_t eb = b.exponent(prec_[i]);
      if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (i) s += ">";
      s += "w" + std::to_string(prec_[i]);
    }
    return s;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.n_ == b.n_ && std::equal(a.prec_.begin(), a.prec_.begin() + a.n_, b.prec_.begin());
  }
  friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

 private:
  MonomialOrder() : n_(0), prec_{} {}

  std::uint8_t n_;
  std::array<std::uint8_t, kMaxVariableCount> prec_;
};

}  // namespace gf2alg

#endif
