#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "gf2alg/polynomial.hpp"
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

}  // namespace

TEST(Monomial, BasicsAndDegree) {
  Monomial m = Monomial::from_exponents({3, 2});  // w2^3 w3^2
  EXPECT_EQ(m.degree(), 3u * 2 + 2u * 3);
  EXPECT_EQ(m.exponent(2), 3u);
  EXPECT_EQ(m.exponent(3), 2u);
  EXPECT_EQ(m.exponent(4), 0u);
  EXPECT_TRUE(Monomial{}.is_unit());
  EXPECT_TRUE(Monomial{}.divides(m));
  EXPECT_FALSE(m.divides(Monomial::variable(2)));
  EXPECT_EQ(Monomial::lcm(Monomial::from_exponents({3, 0}), Monomial::from_exponents({1, 2})),
            Monomial::from_exponents({3, 2}));
}

TEST(Monomial, CachedDegreeStaysConsistent) {
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 300; ++i) {
    Monomial a = random_monomial(rng, v4, 40);
    Monomial b = random_monomial(rng, v4, 40);
    Monomial prod = a * b;
    std::uint32_t recomputed = 0;
    for (int v = 2; v <= 4; ++v) recomputed += static_cast<std::uint32_t>(v) * prod.exponent(v);
    EXPECT_EQ(prod.degree(), recomputed);
    if (b.divides(prod)) EXPECT_EQ((prod / b).degree(), prod.degree() - b.degree());
    EXPECT_EQ(a.pow(3).degree(), 3 * a.degree());
  }
}

TEST(Monomial, ExponentOverflowChecked) {
  Monomial big = Monomial::power(2, 60000);
  EXPECT_THROW(big * big, OverflowError);
  EXPECT_THROW(big.pow(2), OverflowError);
  EXPECT_THROW(Monomial::power(2, 70000), OverflowError);
}

TEST(Add, Cancellation) {
  EXPECT_EQ(p3("w2 + w3") + p3("w3"), p3("w2"));
  PolynomialF2 p = p3("w2*w3 + w2^3 + w3^2");
  EXPECT_TRUE((p + p).is_zero());
  EXPECT_EQ(p3("w2*w3 + w2^3 + w3^2") + p3("w2^3 + w3^2"), p3("w2*w3"));
}

TEST(Mul, Examples) {
  EXPECT_EQ(p4("w3") * p4("w2^2 + w4"), p4("w2^2*w3 + w3*w4"));
  PolynomialF2 p = p4("w2^2*w4 + w3 + 1");
  EXPECT_EQ(p4("1") * p, p);
  EXPECT_EQ(p3("w2 + w3") * p3("w2 + w3"), p3("w2^2 + w3^2"));
}

TEST(Mul, SquareIsTermwise) {
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 50; ++i) {
    PolynomialF2 p = random_polynomial(rng, v4, o423, 24, 12);
    EXPECT_EQ(p * p, p.square());
    EXPECT_EQ(p.square(), p.frobenius_pow(1));
  }
}

TEST(LeadingMonomial, Examples) {
  EXPECT_EQ(p3("w2^3 + w3^2").leading_monomial(), Monomial::from_exponents({3, 0}));
  EXPECT_EQ(p4("w2^4 + w2*w3^2 + w2^2*w4 + w4^2").leading_monomial(),
            Monomial::power(4, 2));
  EXPECT_EQ(p3("w3").leading_monomial(), Monomial::variable(3));
  EXPECT_THROW(p3("0").leading_monomial(), DomainError);
}

TEST(LeadingMonomial, MultiplicativeOnRandomPairs) {
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 200; ++i) {
    PolynomialF2 p = random_nonzero_polynomial(rng, v4, o423, 18, 8);
    PolynomialF2 q = random_nonzero_polynomial(rng, v4, o423, 18, 8);
    EXPECT_EQ((p * q).leading_monomial(), p.leading_monomial() * q.leading_monomial());
  }
}

TEST(AlgebraLaws, Randomized) {
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 100; ++i) {
    PolynomialF2 a = random_polynomial(rng, v4, o423, 14, 8);
    PolynomialF2 b = random_polynomial(rng, v4, o423, 14, 8);
    PolynomialF2 c = random_polynomial(rng, v4, o423, 14, 8);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a + a).is_zero());
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Order, LawsOnRandomTriples) {
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 500; ++i) {
    Monomial m1 = random_monomial(rng, v4, 30);
    Monomial m2 = random_monomial(rng, v4, 30);
    Monomial m3 = random_monomial(rng, v4, 30);
    int c12 = o423.compare(m1, m2);
    EXPECT_EQ(c12 == 0, m1 == m2);            // total
    EXPECT_EQ(c12, -o423.compare(m2, m1));    // antisymmetric
    if (c12 <= 0)                             // multiplicative
      EXPECT_LE(o423.compare(m1 * m3, m2 * m3), 0);
    EXPECT_LE(o423.compare(Monomial{}, m1), 0);  // 1 is minimal
  }
}

TEST(Order, ContextMismatchRejected) {
  EXPECT_THROW(p3("w2") + p4("w2").converted_to(v4, o423), DomainError);
  EXPECT_THROW(PolynomialF2::zero(v4, o23), DomainError);
  EXPECT_NO_THROW(p3("w2").converted_to(v4, o423) + p4("w2"));
}

TEST(BinomParity, Examples) {
  EXPECT_EQ(binom_parity(2, 1), 0);
  EXPECT_EQ(binom_parity(4, 2), 0);
  // oracle: direct factorial arithmetic fits in 64 bits for C(4,2)
  std::uint64_t direct = (4 * 3) / 2;
  EXPECT_EQ(static_cast<int>(direct % 2), 0);
  for (int t = 2; t <= 14; ++t) {
    std::uint64_t m = (1ull << (t - 2)) - 1;
    for (std::uint64_t d = 0; d <= m; ++d) EXPECT_EQ(binom_parity(m, d), 1);
  }
  EXPECT_THROW(binom_parity(3, 4), DomainError);
}

TEST(BinomParity, AgreesWithPascalRowsTo512) {
  // Independent oracle: Pascal's triangle computed mod 2.
  std::vector<std::uint8_t> row{1};
  for (std::uint64_t m = 0; m <= 512; ++m) {
    for (std::uint64_t j = 0; j <= m; ++j)
      ASSERT_EQ(binom_parity(m, j), static_cast<int>(row[j])) << "m=" << m << " j=" << j;
    std::vector<std::uint8_t> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j)
      next[j] = static_cast<std::uint8_t>(row[j - 1] ^ row[j]);
    row = std::move(next);
  }
}

TEST(Text, ParseExamples) {
  EXPECT_EQ(p3("w2^3 + w3^2").term_count(), 2u);
  EXPECT_TRUE(p3("1").is_one());
  PolynomialF2 p = p4("w4^2 + w2^2*w4");
  EXPECT_TRUE(p.contains_term(Monomial::power(4, 2)));
  EXPECT_TRUE(p.contains_term(Monomial::power(2, 2) * Monomial::variable(4)));
  EXPECT_TRUE(p3("  w2 ^ 2  *  w3  ").contains_term(Monomial::from_exponents({2, 1})));
  EXPECT_TRUE(p3("w2 + w2").is_zero());
  EXPECT_EQ(p3("w2*w2"), p3("w2^2"));
  EXPECT_TRUE(p3("0").is_zero());
}

TEST(Text, FormatDescendingUnderActiveOrder) {
  EXPECT_EQ(format_polynomial(p3("w3^2 + w2^3")), "w2^3 + w3^2");
  EXPECT_EQ(format_polynomial(p4("w2^4 + w2*w3^2 + w2^2*w4 + w4^2")),
            "w4^2 + w2^2*w4 + w2^4 + w2*w3^2");
  EXPECT_EQ(format_polynomial(p3("0")), "0");
  EXPECT_EQ(format_monomial(Monomial::power(2, 12) * Monomial::power(4, 3)), "w2^12*w4^3");
}

TEST(Text, RoundTripOnRandomPolynomials) {
  Rng rng(gf2alg::testing::test_seed());
  for (int i = 0; i < 200; ++i) {
    PolynomialF2 p = random_polynomial(rng, v4, o423, 40, 20);
    EXPECT_EQ(parse_polynomial(format_polynomial(p), v4, o423), p);
  }
}

TEST(Text, ErrorsCarryPositions) {
  try {
    parse_polynomial("w2 + + w3", v3, o23);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 5u);
  }
  try {
    parse_polynomial("w2*w5", v4, o423);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 3u);
  }
  EXPECT_THROW(parse_polynomial("", v3, o23), ParseError);
  EXPECT_THROW(parse_polynomial("w2^", v3, o23), ParseError);
  EXPECT_THROW(parse_polynomial("x2", v3, o23), ParseError);
}
