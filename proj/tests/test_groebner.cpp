#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "gf2alg/groebner.hpp"
#include "gf2alg/text.hpp"
#include "test_util.hpp"

using namespace gf2alg;

namespace {

VariableSet v3(3);
VariableSet v4(4);
MonomialOrder o23 = MonomialOrder::lex({2, 3});
MonomialOrder o423 = MonomialOrder::lex({4, 2, 3});

PolynomialF2 p3(const char* text) { return parse_polynomial(text, v3, o23); }
PolynomialF2 p4(const char* text) { return parse_polynomial(text, v4, o423); }

// The basis of I_{8,3} at the smallest scale, frozen from the recurrence
// worked by hand: g6 = w2^3 + w3^2, g7 = w2^2 w3, g9 = w3^3.
GroebnerBasis small_basis() {
  return GroebnerBasis({p3("w2^3 + w3^2"), p3("w2^2*w3"), p3("w3^3")});
}

std::vector<Monomial> lm_sorted(std::vector<const char*> monomials, const MonomialOrder& ord,
                                VariableSet vars) {
  std::vector<Monomial> out;
  for (const char* m : monomials) out.push_back(parse_polynomial(m, vars, ord).leading_monomial());
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  return out;
}

}  // namespace

TEST(NormalForm, SmallScaleExamples) {
  GroebnerBasis F = small_basis();
  EXPECT_EQ(normal_form(p3("w2^3"), F), p3("w3^2"));
  for (const auto& g : F.generators()) EXPECT_TRUE(normal_form(g, F).is_zero());
  EXPECT_TRUE(normal_form(p3("w2^2*w3^2"), F).is_zero());  // w3 * g7
  EXPECT_TRUE(normal_form(p3("0"), F).is_zero());
}

TEST(NormalForm, FullTailReduction) {
  GroebnerBasis F = small_basis();
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 100; ++i) {
    PolynomialF2 r = normal_form(random_polynomial(rng, v3, o23, 30, 12), F);
    for (const auto& term : r.terms())
      for (const auto& lm : F.leading_monomials()) EXPECT_FALSE(lm.divides(term));
  }
}

TEST(NormalForm, IdempotentAndLinear) {
  GroebnerBasis F = small_basis();
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 100; ++i) {
    PolynomialF2 p = random_polynomial(rng, v3, o23, 25, 10);
    PolynomialF2 q = random_polynomial(rng, v3, o23, 25, 10);
    EXPECT_EQ(normal_form(normal_form(p, F), F), normal_form(p, F));
    EXPECT_EQ(normal_form(p + q, F), normal_form(p, F) + normal_form(q, F));
  }
}

TEST(NormalForm, MembershipSoundness) {
  GroebnerBasis F = small_basis();
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 100; ++i) {
    PolynomialF2 combo = PolynomialF2::zero(v3, o23);
    for (const auto& g : F.generators())
      combo += random_polynomial(rng, v3, o23, 12, 5) * g;
    EXPECT_TRUE(normal_form(combo, F).is_zero());
  }
}

TEST(SPolynomial, Examples) {
  PolynomialF2 f = p3("w2^3 + w3^2");
  PolynomialF2 g = p3("w2^2*w3");
  EXPECT_TRUE(s_polynomial(f, f).is_zero());
  EXPECT_EQ(s_polynomial(f, g), p3("w3^3"));
  EXPECT_THROW(s_polynomial(f, p3("0")), DomainError);

  // Coprime leading monomials: the S-polynomial reduces to zero already
  // modulo the pair.
  PolynomialF2 h = p3("w3^3");
  GroebnerBasis pair({f, h});
  EXPECT_TRUE(f.leading_monomial().coprime_with(h.leading_monomial()));
  EXPECT_TRUE(normal_form(s_polynomial(f, h), pair).is_zero());
}

TEST(IsGroebner, PositiveAndNegative) {
  EXPECT_TRUE(is_groebner(small_basis()));
  // The pair {w2^2 w3, w2^3 + w3^2} has the irreducible S-polynomial w3^3.
  GroebnerBasis bad({p3("w2^2*w3"), p3("w2^3 + w3^2")});
  EXPECT_FALSE(is_groebner(bad));
  EXPECT_FALSE(
      normal_form(s_polynomial(bad.generators()[0], bad.generators()[1]), bad).is_zero());
}

TEST(Buchberger, SmallScaleFamily) {
  // Generators g5 = 0, g6, g7 of the n=7, k=3 ideal (equal to the n=8 one).
  std::vector<PolynomialF2> gens = {p3("0"), p3("w2^3 + w3^2"), p3("w2^2*w3")};
  GroebnerBasis gb = buchberger(gens, o23);
  EXPECT_TRUE(gb.reduced());
  EXPECT_TRUE(is_groebner(gb));
  EXPECT_EQ(gb.lm_set(), lm_sorted({"w2^3", "w2^2*w3", "w3^3"}, o23, v3));
}

TEST(Buchberger, PrincipalIdeal) {
  GroebnerBasis gb = buchberger({p3("w2")}, o23);
  EXPECT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb.generators()[0], p3("w2"));
}

TEST(Buchberger, FourVariableFamily) {
  // g6..g9 for k=4 (frozen from the recurrence worked by hand).
  std::vector<PolynomialF2> gens = {p4("w2^3 + w3^2"), p4("w2^2*w3"),
                                    p4("w2^4 + w2*w3^2 + w2^2*w4 + w4^2"), p4("w3^3")};
  GroebnerBasis gb = buchberger(gens, o423);
  EXPECT_TRUE(is_groebner(gb));
  EXPECT_EQ(gb.lm_set(), lm_sorted({"w2^3", "w2^2*w3", "w3^3", "w4^2"}, o423, v4));
}

TEST(Buchberger, ReducedBasisUniqueUnderShuffles) {
  std::vector<PolynomialF2> gens = {p4("w2^3 + w3^2"), p4("w2^2*w3"),
                                    p4("w2^4 + w2*w3^2 + w2^2*w4 + w4^2"), p4("w3^3")};
  GroebnerBasis reference = buchberger(gens, o423);
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 10; ++i) {
    std::vector<PolynomialF2> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    GroebnerBasis again = buchberger(shuffled, o423);
    ASSERT_EQ(again.size(), reference.size());
    for (std::size_t j = 0; j < again.size(); ++j)
      EXPECT_EQ(again.generators()[j], reference.generators()[j]);
  }
}

TEST(Buchberger, ReducedBasisProperties) {
  std::vector<PolynomialF2> gens = {p4("w2^3 + w3^2"), p4("w2^2*w3"),
                                    p4("w2^4 + w2*w3^2 + w2^2*w4 + w4^2"), p4("w3^3")};
  GroebnerBasis gb = buchberger(gens, o423);
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i + 1 < g.size())
      EXPECT_TRUE(o423.less(g[i].leading_monomial(), g[i + 1].leading_monomial()));
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& term : g[i].terms())
        EXPECT_FALSE(g[j].leading_monomial().divides(term));
    }
  }
  // Ideal equality with the input.
  for (const auto& p : gens) EXPECT_TRUE(contains(gb, p));
}

TEST(Buchberger, RejectsAllZeroInput) {
  EXPECT_THROW(buchberger({p3("0"), p3("0")}, o23), DomainError);
}

TEST(StandardMonomials, SmallScaleEnumeration) {
  GroebnerBasis F = small_basis();
  // Independent oracle: filter every monomial of degree <= 12 against the
  // frozen leading-monomial list.
  std::vector<Monomial> lms = {Monomial::from_exponents({3, 0}),
                               Monomial::from_exponents({2, 1}),
                               Monomial::from_exponents({0, 3})};
  std::vector<Monomial> expected;
  for (std::uint32_t b = 0; b <= 12; ++b)
    for (std::uint32_t c = 0; c <= 12; ++c) {
      Monomial m = Monomial::from_exponents({b, c});
      bool divisible = false;
      for (const auto& lm : lms) divisible = divisible || lm.divides(m);
      if (!divisible) expected.push_back(m);
    }
  EXPECT_EQ(expected.size(), 7u);

  std::vector<Monomial> got = standard_monomials_all(F);
  ASSERT_EQ(got.size(), 7u);
  for (const auto& m : expected) EXPECT_NE(std::find(got.begin(), got.end(), m), got.end());
  // Frozen order: 1, w2, w3, w2^2, w2 w3, w3^2, w2 w3^2.
  EXPECT_EQ(got[0], Monomial{});
  EXPECT_EQ(got[1], Monomial::variable(2));
  EXPECT_EQ(got[2], Monomial::variable(3));
  EXPECT_EQ(got[6], Monomial::from_exponents({1, 2}));
}

TEST(StandardMonomials, DegreeZeroIsUnit) {
  GroebnerBasis F = small_basis();
  auto d0 = standard_monomials(F, 0);
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_TRUE(d0[0].is_unit());
  EXPECT_TRUE(standard_monomials(F, 1).empty());  // no degree-1 variable exists
}

TEST(StandardMonomials, ProductCountAtScaleFour) {
  // Leading monomials of the n=16, k=4 basis; standard monomials split into
  // (b, c) pairs filtered by the w2/w3 part times w4 powers below 4.
  GroebnerBasis F({p4("w2^7"), p4("w2^6*w3"), p4("w2^4*w3^3"), p4("w3^7"), p4("w4^4")});
  std::size_t pairs = 0;
  for (std::uint32_t b = 0; b <= 7; ++b)
    for (std::uint32_t c = 0; c <= 7; ++c) {
      bool div = (b >= 7) || (b >= 6 && c >= 1) || (b >= 4 && c >= 3) || (c >= 7);
      if (!div) ++pairs;
    }
  EXPECT_EQ(pairs, 35u);
  EXPECT_EQ(standard_monomials_all(F).size(), pairs * 4);  // = 140
}

TEST(Contains, Examples) {
  GroebnerBasis F = small_basis();
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 20; ++i) {
    PolynomialF2 combo = PolynomialF2::zero(v3, o23);
    for (const auto& g : F.generators()) combo += random_polynomial(rng, v3, o23, 10, 4) * g;
    EXPECT_TRUE(contains(F, combo));
  }
  EXPECT_FALSE(contains(F, p3("w2*w3^2")));  // a standard monomial
}

TEST(FiniteDimensionality, PurePowerCriterion) {
  EXPECT_TRUE(quotient_finite_dimensional(small_basis()));
  GroebnerBasis open_in_w3({p3("w2")});
  EXPECT_FALSE(quotient_finite_dimensional(open_in_w3));
  EXPECT_THROW(standard_monomials_all(open_in_w3), DomainError);
  // Degree slices stay well defined even without finite dimensionality.
  EXPECT_EQ(standard_monomials(open_in_w3, 6).size(), 1u);  // w3^2
}
