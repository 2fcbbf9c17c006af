#ifndef GF2ALG_TEXT_HPP
#define GF2ALG_TEXT_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "gf2alg/polynomial.hpp"

namespace gf2alg {

// Canonical monomial text: factors in ascending variable index, "*" between
// factors, "^e" only for e >= 2, "1" for the unit.
inline std::string format_monomial(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (int v = kMinVariableIndex; v <= kMaxVariableIndex; ++v) {
    std::uint32_t e = m.exponent(v);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += "w" + std::to_string(v);
    if (e >= 2) s += "^" + std::to_string(e);
  }
  return s;
}

// Terms in decreasing order under the polynomial's own order, joined by " + ".
// The zero polynomial prints as "0".
inline std::string format_polynomial(const PolynomialF2& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    if (!s.empty()) s += " + ";
    s += format_monomial(t);
  }
  return s;
}

// Grammar: poly = term ("+" term)*; term = "0" | "1" | factor ("*" factor)*;
// factor = "w"<index> ["^"<exp>]. Whitespace is insignificant. Repeated
// factors multiply; repeated terms cancel in pairs (GF(2) addition).
inline PolynomialF2 parse_polynomial(std::string_view text, VariableSet vars,
                                     const MonomialOrder& order) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_uint = [&](const char* what) -> std::uint64_t {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(std::string("expected ") + what, pos);
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > kMaxExponent) throw ParseError("number too large", pos);
      ++pos;
    }
    return v;
  };

  std::vector<Monomial> terms;
  bool expect_term = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (expect_term) throw ParseError("expected a term", pos);
      break;
    }
    if (!expect_term) {
      if (text[pos] == '+') {
        ++pos;
        expect_term = true;
        continue;
      }
      throw ParseError("expected '+' between terms", pos);
    }
    if (text[pos] == '0') {
      ++pos;
      expect_term = false;
      continue;
    }
    if (text[pos] == '1') {
      ++pos;
      terms.push_back(Monomial{});
      expect_term = false;
      continue;
    }
    // factor ('*' factor)*
    Monomial m;
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] != 'w')
        throw ParseError("expected a variable factor 'w<index>'", pos);
      std::size_t var_pos = pos;
      ++pos;
      std::uint64_t idx = parse_uint("variable index");
      if (idx < kMinVariableIndex || static_cast<int>(idx) > vars.k())
        throw ParseError("unknown variable w" + std::to_string(idx), var_pos);
      std::uint64_t e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        e = parse_uint("exponent");
      }
      m = m * Monomial::power(static_cast<int>(idx), static_cast<std::uint32_t>(e));
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back(m);
    expect_term = false;
  }
  return PolynomialF2::from_terms(vars, order, std::move(terms));
}

}  // namespace gf2alg

#endif
