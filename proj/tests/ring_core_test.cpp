#include <random>

#include <gtest/gtest.h>

#include "ciobs/error.hpp"
#include "ciobs/laurent.hpp"
#include "support.hpp"

namespace ciobs {
namespace {

using testing::P;
using testing::ring_q;

Polynomial term(const RingPtr& r, std::initializer_list<std::uint32_t> exps, long c) {
  return Polynomial::monomial(r, Monomial(Monomial::Exponents(exps)), Coef(c));
}

TEST(Parse, Zero) {
  auto r = ring_q({"x", "y"});
  EXPECT_TRUE(P(r, "0").is_zero());
  EXPECT_EQ(P(r, "0").to_string(), "0");
}

TEST(Parse, CanonicalForm) {
  auto r = ring_q({"x", "y"});
  Polynomial p = P(r, "x^2 - y");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p, term(r, {2, 0}, 1) + term(r, {0, 1}, -1));
  EXPECT_EQ(p.to_string(), "x^2 - y");
}

TEST(Parse, RationalCoefficient) {
  auto r = ring_q({"x", "y", "z"});
  Polynomial p = P(r, "1/2*x*y + z");
  Polynomial expected = term(r, {1, 1, 0}, 1).scaled(Coef(1, 2)) + term(r, {0, 0, 1}, 1);
  EXPECT_EQ(p, expected);
  EXPECT_EQ(p.to_string(), "1/2*x*y + z");
}

TEST(Parse, WhitespaceAndRepeatedFactors) {
  auto r = ring_q({"x", "y"});
  EXPECT_EQ(P(r, "  2 * x*x ^ 2 -3*y+  y "), P(r, "2*x^3 - 2*y"));
  EXPECT_EQ(P(r, "-x + x"), P(r, "0"));
}

TEST(Parse, Parentheses) {
  auto r = ring_q({"x", "y"});
  EXPECT_EQ(P(r, "(x + y)^2"), P(r, "x^2 + 2*x*y + y^2"));
  EXPECT_EQ(P(r, "-(1 - y)*x*((1 - y)*x - 1)"), P(r, "-x^2*y^2 + 2*x^2*y - x^2 - x*y + x"));
  EXPECT_EQ(P(r, "2^3*x"), P(r, "8*x"));
  EXPECT_THROW(P(r, "(x + y"), InputError);
  EXPECT_THROW(P(r, "x + y)"), InputError);
  EXPECT_THROW(P(r, "()"), InputError);
}

TEST(Parse, Errors) {
  auto r = ring_q({"x", "y"});
  EXPECT_THROW(P(r, "x + z"), InputError);
  EXPECT_THROW(P(r, "x +"), InputError);
  EXPECT_THROW(P(r, "x y"), InputError);
  EXPECT_THROW(P(r, "1/0"), InputError);
  EXPECT_THROW(P(r, ""), InputError);
  try {
    P(r, "x + $");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("position 5"), std::string::npos) << e.what();
  }
  auto f2 = PolyRing::make(CoefField::prime(2), {"x"});
  EXPECT_THROW(P(f2, "1/2*x"), InputError);
}

TEST(Field, PrimeFieldArithmetic) {
  EXPECT_THROW(CoefField::prime(9), InputError);
  auto r = PolyRing::make(CoefField::prime(5), {"x"});
  EXPECT_EQ(P(r, "x - 1").to_string(), "x + 4");
  EXPECT_EQ(P(r, "1/2*x"), P(r, "3*x"));
  EXPECT_EQ(P(r, "x + 1").pow(5), P(r, "x^5 + 1"));
  EXPECT_EQ(CoefField::parse("Fp:7").characteristic(), 7u);
  EXPECT_THROW(CoefField::parse("R"), InputError);
}

TEST(PolyOp, Examples) {
  auto r = ring_q({"x", "y"});
  Polynomial p = P(r, "x^2*y - 3");
  EXPECT_EQ(p + Polynomial(r), p);
  EXPECT_EQ(P(r, "x - 1") * P(r, "x + 1"), P(r, "x^2 - 1"));
  EXPECT_EQ(P(r, "x + y").pow(2), P(r, "x^2 + 2*x*y + y^2"));
  auto other = ring_q({"x"});
  EXPECT_THROW(P(r, "x") + P(other, "x"), InputError);
}

TEST(Substitute, LaurentShift) {
  auto rx = ring_q({"X"});
  auto rt = ring_q({"X", "T"});
  LaurentElement phi = LaurentElement(P(rt, "X - T"), "T") + LaurentElement::param_power(rt, "T", -1);

  LaurentElement one = substitute(P(rx, "X"), "X", phi);
  EXPECT_EQ(one, phi);

  // (X - T + T^-1)^2 = X^2 + T^2 + T^-2 - 2XT + 2XT^-1 - 2
  LaurentElement sq = substitute(P(rx, "X^2"), "X", phi);
  LaurentElement expected = LaurentElement(P(rt, "X^2 + T^2 - 2*X*T - 2"), "T") +
                            LaurentElement::param_power(rt, "T", -2) +
                            LaurentElement(P(rt, "2*X"), "T", -1);
  EXPECT_EQ(sq, expected);
  EXPECT_EQ(sq.min_power(), -2);

  LaurentElement c = substitute(P(rx, "7"), "X", phi);
  EXPECT_EQ(c, LaurentElement(P(rt, "7"), "T"));
}

TEST(ClearLaurent, Examples) {
  auto rx = ring_q({"X"});
  auto rt = ring_q({"X", "T"});
  EXPECT_EQ(clear_laurent(LaurentElement::param_power(rt, "T", -1), 1), P(rt, "1"));
  LaurentElement phi = LaurentElement(P(rt, "X - T"), "T") + LaurentElement::param_power(rt, "T", -1);
  Polynomial f1 = clear_laurent(substitute(P(rx, "X^2"), "X", phi), 2);
  EXPECT_EQ(f1, P(rt, "X^2*T^2 + T^4 + 1 - 2*X*T^3 + 2*X*T - 2*T^2"));
  EXPECT_EQ(f1, P(rt, "X*T - T^2 + 1").pow(2));
  EXPECT_EQ(clear_laurent(LaurentElement(P(rt, "X"), "T"), 3), P(rt, "X*T^3"));
  EXPECT_THROW(clear_laurent(substitute(P(rx, "X^2"), "X", phi), 1), InputError);
}

TEST(EvalAt, Specializations) {
  auto rt = ring_q({"X", "T"});
  auto rx = ring_q({"X"});
  Polynomial f1 = P(rt, "X*T - T^2 + 1").pow(2);
  EXPECT_EQ(f1.eval_at("T", Coef(0)), P(rx, "1"));
  EXPECT_EQ(f1.eval_at("T", Coef(1)), P(rx, "X^2"));
  EXPECT_EQ(P(rt, "X^3 - 2").eval_at("T", Coef(0)), P(rx, "X^3 - 2"));
  EXPECT_THROW(f1.eval_at("Y", Coef(0)), InputError);
}

TEST(Degree, MonicAndSentinel) {
  auto r = ring_q({"X", "Y"});
  EXPECT_EQ(P(r, "X^2 + Y*X").degree_in("X"), Degree(2));
  EXPECT_TRUE(P(r, "X^2 + Y*X").is_monic_in("X"));
  EXPECT_EQ(P(r, "Y*X^2").degree_in("X"), Degree(2));
  EXPECT_FALSE(P(r, "Y*X^2").is_monic_in("X"));
  EXPECT_EQ(P(r, "7").degree_in("X"), Degree(0));
  EXPECT_FALSE(P(r, "7").is_monic_in("X"));
  EXPECT_TRUE(P(r, "1").is_monic_in("X"));
  Degree zero = P(r, "0").degree_in("X");
  EXPECT_FALSE(zero.is_finite());
  EXPECT_EQ(zero.to_string(), "-inf");
  EXPECT_TRUE(zero < Degree(0));
  EXPECT_FALSE(P(r, "0").is_monic_in("X"));
}

class RingProperties : public ::testing::TestWithParam<int> {};

TEST_P(RingProperties, AlgebraicIdentities) {
  std::mt19937_64 rng(GetParam());
  auto r = ring_q({"x", "y", "z"});
  for (int iter = 0; iter < 25; ++iter) {
    Polynomial p = testing::random_poly(rng, r, 4, 6);
    Polynomial q = testing::random_poly(rng, r, 4, 6);
    Polynomial w = testing::random_poly(rng, r, 2, 3);
    EXPECT_EQ(Polynomial::parse(p.to_string(), r), p);
    EXPECT_EQ((p + q) - q, p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p * (q + w), p * q + p * w);
    Coef c(iter - 7, 3);
    EXPECT_EQ((p * q).specialize("y", c), p.specialize("y", c) * q.specialize("y", c));
    EXPECT_EQ((p + q).eval_at("z", c), p.eval_at("z", c) + q.eval_at("z", c));
  }
}

TEST_P(RingProperties, PhiAtOneIsIdentity) {
  std::mt19937_64 rng(GetParam() + 1000);
  auto r = ring_q({"X", "Y"});
  auto rt = ring_q({"X", "Y", "T"});
  LaurentElement phi = LaurentElement(P(rt, "X - T"), "T") + LaurentElement::param_power(rt, "T", -1);
  for (int iter = 0; iter < 10; ++iter) {
    Polynomial p = testing::random_poly(rng, r, 4, 5);
    LaurentElement image = substitute(p, "X", phi);
    EXPECT_EQ(image.specialize(Coef(1)), p.embed(rt));
    long e = -image.min_power() + iter % 3;
    Polynomial cleared = clear_laurent(image, e);
    EXPECT_EQ(cleared.specialize("T", Coef(1)), image.specialize(Coef(1)));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingProperties, ::testing::Values(1, 2, 3));

TEST(Ring, ExtendAndFresh) {
  auto r = ring_q({"x", "T"});
  EXPECT_EQ(r->fresh_name("T"), "T1");
  auto big = extend_ring(r, "w");
  EXPECT_EQ(big->vars(), (std::vector<std::string>{"x", "T", "w"}));
  EXPECT_THROW(extend_ring(r, "x"), InputError);
  EXPECT_THROW(PolyRing::make(CoefField::rationals(), {"x", "x"}), InputError);
  EXPECT_THROW(P(big, "w").embed(r), InputError);
}

TEST(Order, Comparisons) {
  auto r = ring_q({"x", "y", "z"});
  auto m = [&](std::initializer_list<std::uint32_t> e) { return Monomial(Monomial::Exponents(e)); };
  BoundOrder lex(MonomialOrder::lex(), *r);
  BoundOrder grevlex(MonomialOrder::grevlex(), *r);
  BoundOrder elim(MonomialOrder::elimination({"z"}), *r);
  EXPECT_GT(lex.compare(m({1, 0, 0}), m({0, 5, 5})), 0);
  EXPECT_LT(grevlex.compare(m({1, 0, 0}), m({0, 1, 1})), 0);
  // grevlex: x*z < y^2 (smaller power of the last variable wins)
  EXPECT_LT(grevlex.compare(m({1, 0, 1}), m({0, 2, 0})), 0);
  EXPECT_GT(elim.compare(m({0, 0, 1}), m({5, 5, 0})), 0);
  EXPECT_EQ(MonomialOrder::parse("elim:a,b").block(), (std::vector<std::string>{"a", "b"}));
  EXPECT_THROW(MonomialOrder::parse("deglex"), InputError);
}

}  // namespace
}  // namespace ciobs
