#include <gtest/gtest.h>

#include <vector>

#include "gf2alg/quotient.hpp"
#include "gf2alg/text.hpp"
#include "test_util.hpp"

using namespace gf2alg;

namespace {

const QuotientAlgebra& w83() {
  static QuotientAlgebra a = QuotientAlgebra::build(IdealSpec(8, 3));
  return a;
}
const QuotientAlgebra& w84() {
  static QuotientAlgebra a = QuotientAlgebra::build(IdealSpec(8, 4));
  return a;
}
const QuotientAlgebra& w144() {
  static QuotientAlgebra a = QuotientAlgebra::build(IdealSpec(14, 4));
  return a;
}
const QuotientAlgebra& w164() {
  static QuotientAlgebra a = QuotientAlgebra::build(IdealSpec(16, 4));
  return a;
}

AlgebraElement coset(const QuotientAlgebra& alg, std::initializer_list<std::uint32_t> exps) {
  return alg.monomial_coset(Monomial::from_exponents(exps));
}

}  // namespace

TEST(BuildAlgebra, Dimensions) {
  EXPECT_EQ(w83().dim(), 7u);
  EXPECT_EQ(w84().dim(), 14u);
  EXPECT_EQ(w144().dim(), 77u);
  EXPECT_EQ(w164().dim(), 140u);
}

TEST(BuildAlgebra, ShiftedFamilySameBasis) {
  QuotientAlgebra a = QuotientAlgebra::build(IdealSpec(9, 4));
  ASSERT_EQ(a.dim(), w84().dim());
  for (std::uint32_t i = 0; i < a.dim(); ++i) EXPECT_EQ(a.basis()[i], w84().basis()[i]);
}

TEST(BuildAlgebra, BasisOrderedByDegreeThenOrder) {
  const auto& basis = w164().basis();
  EXPECT_TRUE(basis.front().is_unit());
  for (std::size_t i = 1; i < basis.size(); ++i) {
    EXPECT_LE(basis[i - 1].degree(), basis[i].degree());
    if (basis[i - 1].degree() == basis[i].degree())
      EXPECT_TRUE(w164().order().less(basis[i - 1], basis[i]));
  }
}

TEST(BuildAlgebra, GeneratorTablesMatchNormalForm) {
  const QuotientAlgebra& alg = w84();
  for (int v = 2; v <= 4; ++v) {
    for (std::uint32_t u = 0; u < alg.dim(); ++u) {
      PolynomialF2 direct = normal_form(
          PolynomialF2::monomial(alg.vars(), alg.order(),
                                 alg.basis()[u] * Monomial::variable(v)),
          alg.gb());
      DynBitset c(alg.dim());
      c.set(u);
      alg.apply_generator(v, c);
      AlgebraElement via_table(alg, std::move(c));
      EXPECT_EQ(alg.to_polynomial(via_table), direct);
    }
  }
}

TEST(BuildAlgebra, InfiniteDimensionalRejected) {
  GroebnerBasis open_basis({parse_polynomial("w2", VariableSet(3), MonomialOrder::lex({2, 3}))});
  EXPECT_THROW(QuotientAlgebra::build(IdealSpec(6, 3), open_basis), DomainError);
}

TEST(Multiply, UnitAndExamples) {
  const QuotientAlgebra& alg = w164();
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 10; ++i) {
    AlgebraElement a = alg.reduce(random_polynomial(rng, alg.vars(), alg.order(), 20, 6));
    EXPECT_EQ(multiply(alg.unit(), a), a);
  }
  // ht(w3) = 6 at this scale, so the 7th power dies.
  AlgebraElement w3_7 = coset(alg, {0, 7, 0});
  EXPECT_TRUE(w3_7.is_zero());
  EXPECT_FALSE(coset(alg, {0, 6, 0}).is_zero());
  // w2^4 w4 survives in the small algebra.
  EXPECT_FALSE(coset(w84(), {4, 0, 1}).is_zero());
}

TEST(Multiply, TablePathAgreesWithPolynomialPath) {
  const QuotientAlgebra& alg = w144();
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 40; ++i) {
    PolynomialF2 p = random_polynomial(rng, alg.vars(), alg.order(), 16, 5);
    PolynomialF2 q = random_polynomial(rng, alg.vars(), alg.order(), 16, 5);
    AlgebraElement via_tables = multiply(alg.reduce(p), alg.reduce(q));
    AlgebraElement direct = alg.reduce(p * q);
    EXPECT_EQ(via_tables, direct);
  }
}

TEST(Multiply, MismatchedAlgebrasRejected) {
  EXPECT_THROW(multiply(w84().unit(), w164().unit()), DomainError);
}

TEST(Height, PowerOfTwoFamilies) {
  struct Row {
    int n;
    std::array<int, 3> expected;
  };
  const std::vector<Row> rows = {
      {8, {4, 2, 3}},    {9, {4, 2, 3}},    {14, {12, 6, 5}},  {15, {12, 6, 6}},
      {16, {12, 6, 7}},  {17, {12, 6, 7}},
  };
  for (const auto& row : rows) {
    QuotientAlgebra alg = QuotientAlgebra::build(IdealSpec(row.n, 4));
    for (int v = 2; v <= 4; ++v)
      EXPECT_EQ(alg.height(v), row.expected[static_cast<std::size_t>(v - 2)])
          << "n=" << row.n << " v=" << v;
  }
}

TEST(Height, DefinitionHolds) {
  for (int n : {8, 14, 15, 16}) {
    QuotientAlgebra alg = QuotientAlgebra::build(IdealSpec(n, 4));
    for (int v = 2; v <= 4; ++v) {
      int ht = alg.height(v);
      ASSERT_GT(ht, 0);
      Monomial at = Monomial::power(v, static_cast<std::uint32_t>(ht));
      EXPECT_FALSE(alg.monomial_coset(at).is_zero());
      EXPECT_TRUE(alg.monomial_coset(at * Monomial::variable(v)).is_zero());
    }
  }
}

TEST(Height, AntitoneInN) {
  QuotientAlgebra w15 = QuotientAlgebra::build(IdealSpec(15, 4));
  for (int v = 2; v <= 4; ++v) {
    EXPECT_LE(w144().height(v), w15.height(v));
    EXPECT_LE(w15.height(v), w164().height(v));
  }
}

TEST(CupLength, PowerOfTwoValues) {
  auto cl16 = w164().cup_length();
  EXPECT_EQ(cl16.length, 15);
  // The witness is a nonzero coset whose exponents sum to the cup-length.
  EXPECT_FALSE(w164().monomial_coset(cl16.witness).is_zero());
  std::uint32_t total = 0;
  for (int v = 2; v <= 4; ++v) total += cl16.witness.exponent(v);
  EXPECT_EQ(total, 15u);
  // w2^12 w4^3 realizes the maximum.
  EXPECT_FALSE(coset(w164(), {12, 0, 3}).is_zero());

  EXPECT_EQ(w84().cup_length().length, 5);
  QuotientAlgebra w17 = QuotientAlgebra::build(IdealSpec(17, 4));
  EXPECT_EQ(w17.cup_length().length, w164().cup_length().length);
  EXPECT_EQ(w17.cup_length().witness, cl16.witness);
}

TEST(CupLength, DominatesHeights) {
  for (int n : {8, 14, 16}) {
    QuotientAlgebra alg = QuotientAlgebra::build(IdealSpec(n, 4));
    int cl = alg.cup_length().length;
    for (int v = 2; v <= 4; ++v) EXPECT_GE(cl, alg.height(v));
  }
}

TEST(DimProfile, SumsAndDegreeZero) {
  auto profile = w83().dim_profile();
  std::uint32_t total = 0;
  for (auto [deg, d] : profile) total += d;
  EXPECT_EQ(total, 7u);
  EXPECT_EQ(profile[0].second, 1u);
  // Frozen slice dimensions for the 7-dimensional algebra: one basis
  // monomial in each of the degrees 0,2,3,4,5,6,8 (w2 w3^2 sits in degree 8).
  std::vector<std::uint32_t> dims;
  for (auto [deg, d] : profile) dims.push_back(d);
  EXPECT_EQ(dims, (std::vector<std::uint32_t>{1, 0, 1, 1, 1, 1, 1, 0, 1}));

  auto profile16 = w164().dim_profile();
  total = 0;
  for (auto [deg, d] : profile16) total += d;
  EXPECT_EQ(total, 140u);
  EXPECT_EQ(profile16[0].second, 1u);
}

TEST(Element, DegreeBookkeeping) {
  const QuotientAlgebra& alg = w84();
  EXPECT_EQ(alg.unit().degree(), 0u);
  EXPECT_EQ(alg.generator(4).degree(), 4u);
  AlgebraElement mixed = alg.unit() + alg.generator(2);
  EXPECT_FALSE(mixed.degree().has_value());
  EXPECT_FALSE(alg.zero().degree().has_value());
  PolynomialF2 back = alg.to_polynomial(alg.generator(3));
  EXPECT_EQ(back, parse_polynomial("w3", alg.vars(), alg.order()));
}

TEST(Element, VanishingIdentitiesAtScaleFourAndFive) {
  // In the n = 2^t - 2 algebra: w2^{2^{t-2}} w3^{2^{t-2}-1} = 0,
  // w3^{2^{t-2}-1} w4^{2^{t-2}-2} = 0, w2^{2^{t-1}+2^{t-2}} w4^{2^{t-2}-2} = 0.
  for (int t : {4, 5}) {
    QuotientAlgebra alg = QuotientAlgebra::build(IdealSpec((1 << t) - 2, 4));
    std::uint32_t q = 1u << (t - 2);
    EXPECT_TRUE(coset(alg, {q, 2 * q - 1, 0}).is_zero()) << "t=" << t;
    EXPECT_TRUE(coset(alg, {0, q - 1, q - 2}).is_zero()) << "t=" << t;
    EXPECT_TRUE(coset(alg, {2 * q + q, 0, q - 2}).is_zero()) << "t=" << t;
    // Sharpness at t=4: dropping one factor from (c) leaves it nonzero.
    if (t == 4) EXPECT_FALSE(coset(alg, {2 * q + q, 0, 0}).is_zero());
  }
}

TEST(ScaleFive, HeightsAndCupLength) {
  QuotientAlgebra w32 = QuotientAlgebra::build(IdealSpec(32, 4));
  EXPECT_EQ(w32.dim(), 1240u);
  EXPECT_EQ(w32.height(2), 28);
  EXPECT_EQ(w32.height(3), 14);
  EXPECT_EQ(w32.height(4), 15);
  EXPECT_EQ(w32.cup_length().length, 35);
}
